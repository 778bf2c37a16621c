#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <variant>

#include "bcx/bicomplex.hpp"
#include "bcx/models.hpp"
#include "bcx/scalar_field.hpp"

using bcx::BasisCombo;
using bcx::Bicomplex;
using bcx::Family;
using bcx::HarmonicParams;
using bcx::IsotonicParams;
using bcx::ModelParams;
using bcx::ModelSpec;
using bcx::PhasePoint;
using bcx::SignBranch;
using bcx::SolutionType;

namespace {

struct Sampler {
  std::mt19937_64 eng{0x90de15u};
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  }
  PhasePoint point(double r = 1.3) {
    return {uniform(-r, r), uniform(-r, r), uniform(-r, r), uniform(-r, r)};
  }
};

ModelSpec harmonic(double a, SolutionType t, SignBranch s = SignBranch::Plus) {
  return {Family::Harmonic, a, 0.0, t, s};
}
ModelSpec inverted(double b, SolutionType t, SignBranch s = SignBranch::Plus) {
  return {Family::Inverted, 0.0, b, t, s};
}
ModelSpec isotonic(double a, double b, SolutionType t, SignBranch s = SignBranch::Plus,
                   SignBranch b3 = SignBranch::Plus, SignBranch b4 = SignBranch::Plus) {
  return {Family::Isotonic, a, b, t, s, b3, b4};
}

// checks the three Cauchy-Riemann condition sets tying G1 to G2, G3, G4
void expect_G_chain_cr(const std::array<BasisCombo, 4>& G, const PhasePoint& pt, double tol) {
  const auto d = [&](int i, int c) { return G[i].gradient(pt)[c]; };
  EXPECT_NEAR(d(0, 0), d(1, 1), tol);
  EXPECT_NEAR(d(0, 1), -d(1, 0), tol);
  EXPECT_NEAR(d(0, 2), d(1, 3), tol);
  EXPECT_NEAR(d(0, 3), -d(1, 2), tol);
  EXPECT_NEAR(d(0, 0), d(2, 2), tol);
  EXPECT_NEAR(d(0, 1), d(2, 3), tol);
  EXPECT_NEAR(d(0, 2), -d(2, 0), tol);
  EXPECT_NEAR(d(0, 3), -d(2, 1), tol);
  EXPECT_NEAR(d(0, 0), d(3, 3), tol);
  EXPECT_NEAR(d(0, 1), -d(3, 2), tol);
  EXPECT_NEAR(d(0, 2), -d(3, 1), tol);
  EXPECT_NEAR(d(0, 3), d(3, 0), tol);
}

}  // namespace

TEST(Potential, HarmonicExamples) {
  const ModelSpec spec = harmonic(1.0, SolutionType::I);
  const auto v1 = bcx::potential_components(spec, {1, 0, 0, 0});
  EXPECT_EQ(v1, (std::array<double, 4>{1, 0, 0, 0}));
  const auto v2 = bcx::potential_components(spec, {1, 1, 0, 0});
  EXPECT_EQ(v2, (std::array<double, 4>{0, 2, 0, 0}));
}

TEST(Potential, IsotonicExample) {
  const auto v = bcx::potential_components(isotonic(1.0, 2.0, SolutionType::I), {1, 0, 0, 0});
  EXPECT_NEAR(v[0], 3.0, 1e-15);
  EXPECT_NEAR(v[1], 0.0, 1e-15);
  EXPECT_NEAR(v[2], 0.0, 1e-15);
  EXPECT_NEAR(v[3], 0.0, 1e-15);
}

TEST(Potential, MatchesBicomplexFunctionEvaluation) {
  // V(x) = a x^2 + b / x^2 evaluated in the ring must reproduce the
  // componentwise closed forms
  Sampler s;
  for (const ModelSpec spec : {harmonic(2.0, SolutionType::I), inverted(2.0, SolutionType::I),
                               isotonic(2.0, 6.0, SolutionType::I)}) {
    int done = 0;
    while (done < 50) {
      const PhasePoint pt = s.point();
      const Bicomplex x{pt.x1, pt.p1, pt.p2, pt.x2};
      const Bicomplex x2 = x * x;
      if (is_singular(x2, 1e-3)) continue;
      Bicomplex want = bcx::effective_a(spec) * x2;
      if (spec.family == Family::Isotonic) want += spec.b * inverse(x2);
      std::array<double, 4> got{};
      try {
        got = bcx::potential_components(spec, pt);
      } catch (const bcx::SingularPhasePoint&) {
        continue;
      }
      ++done;
      EXPECT_LE(euclid_norm(Bicomplex{got[0], got[1], got[2], got[3]} - want),
                1e-10 * std::max(1.0, euclid_norm(want)));
    }
  }
}

TEST(Potential, IsotonicThrowsInsideExclusionRadius) {
  EXPECT_THROW((void)bcx::potential_components(isotonic(1.0, 2.0, SolutionType::I), {0, 0, 0, 0}),
               bcx::SingularPhasePoint);
  // u = v = 0 while s, t stay finite
  EXPECT_THROW(
      (void)bcx::potential_components(isotonic(1.0, 2.0, SolutionType::I), {0.7, 0.3, 0.3, -0.7}),
      bcx::SingularPhasePoint);
}

TEST(GChain, HarmonicCoefficientReadOff) {
  const auto G = bcx::derive_G_chain(HarmonicParams{1.0, 0.0, 0.0, 0.0});
  Sampler s;
  for (int k = 0; k < 20; ++k) {
    const PhasePoint p = s.point();
    EXPECT_DOUBLE_EQ(G[1].value(p), 2.0 * (p.x1 * p.p1 - p.x2 * p.p2));
    EXPECT_DOUBLE_EQ(G[2].value(p), 2.0 * (p.x1 * p.p2 - p.x2 * p.p1));
    EXPECT_DOUBLE_EQ(G[3].value(p), 2.0 * (p.x1 * p.x2 + p.p1 * p.p2));
  }
  const auto Z = bcx::derive_G_chain(HarmonicParams{});
  for (int k = 0; k < 5; ++k) {
    const PhasePoint p = s.point();
    for (const auto& g : Z) EXPECT_EQ(g.value(p), 0.0);
  }
}

TEST(GChain, RandomHarmonicParamsSatisfyCrConditions) {
  Sampler s;
  for (int k = 0; k < 40; ++k) {
    const HarmonicParams params{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1),
                                s.uniform(-1, 1)};
    const auto G = bcx::derive_G_chain(params);
    expect_G_chain_cr(G, s.point(), 1e-12);
  }
}

TEST(GChain, RandomIsotonicParamsSatisfyCrConditions) {
  Sampler s;
  for (int k = 0; k < 40; ++k) {
    IsotonicParams params;
    for (int i = 0; i < 4; ++i) {
      params.alpha[i] = s.uniform(-1, 1);
      params.beta[i] = s.uniform(-0.5, 0.5);
    }
    const auto G = bcx::derive_G_chain(params);
    PhasePoint pt = s.point();
    // keep clear of both projected poles
    while (true) {
      const auto [w1, w2] = bcx::projected_coordinates(pt);
      if (std::abs(w1) > 0.6 && std::abs(w2) > 0.6) break;
      pt = s.point();
    }
    expect_G_chain_cr(G, pt, 1e-12);
  }
}

TEST(GChain, FdCrossCheckOfGradients) {
  // finite differences as an independent oracle for the analytic gradients
  Sampler s;
  IsotonicParams params;
  params.alpha = {0.2, -0.1, 0.3, 0.05};
  params.beta = {0.1, -0.2, 0.15, 0.25};
  const auto G = bcx::derive_G_chain(params);
  for (int k = 0; k < 20; ++k) {
    PhasePoint pt = s.point();
    const auto [w1, w2] = bcx::projected_coordinates(pt);
    if (std::abs(w1) < 0.6 || std::abs(w2) < 0.6) continue;
    if (std::abs(pt.p1 - pt.p2) < 0.05 || std::abs(pt.p1 + pt.p2) < 0.05) continue;
    for (const auto& g : G) {
      const auto field = g.to_field();
      const auto grad = g.gradient(pt);
      for (int c = 0; c < 4; ++c)
        EXPECT_NEAR(fd_partial(field, pt, c, bcx::FDScheme{}), grad[c],
                    1e-5 * std::max(1.0, std::abs(grad[c])));
    }
  }
}

TEST(GFields, HarmonicTypeIClosedForm) {
  const double a = 2.0;
  const auto st = bcx::build_state(harmonic(a, SolutionType::I));
  const double al = 0.25 * std::sqrt(a / 2.0);
  Sampler s;
  for (int k = 0; k < 20; ++k) {
    const PhasePoint p = s.point();
    const double q = p.x1 * p.x1 - p.p1 * p.p1 - p.p2 * p.p2 + p.x2 * p.x2;
    const double b4 = p.x1 * p.x2 + p.p1 * p.p2;
    EXPECT_NEAR(st.g_combos[0].value(p), al * q + 2.0 * al * b4, 1e-14);
  }
}

TEST(GFields, AllZeroParamsGiveZeroFields) {
  const auto combos = bcx::g_field_combos(ModelParams{HarmonicParams{}});
  Sampler s;
  for (int k = 0; k < 5; ++k)
    for (const auto& c : combos) EXPECT_EQ(c.value(s.point()), 0.0);
}

TEST(GFields, IsotonicAtanCoefficient) {
  const auto st = bcx::build_state(isotonic(2.0, 6.0, SolutionType::I));
  const auto& p = std::get<IsotonicParams>(st.params);
  // g1i carries -4 beta3 atan(u/v)
  EXPECT_DOUBLE_EQ(st.g_combos[1].c[4], -4.0 * p.beta[2]);
  // g2i carries -4 beta4 atan(s/t)
  EXPECT_DOUBLE_EQ(st.g_combos[3].c[5], -4.0 * p.beta[3]);
  // g1r carries 2 beta3 log, g2r carries 2 beta4 log
  EXPECT_DOUBLE_EQ(st.g_combos[0].c[6], 2.0 * p.beta[2]);
  EXPECT_DOUBLE_EQ(st.g_combos[2].c[7], 2.0 * p.beta[3]);
}

TEST(SolveParams, HarmonicExamples) {
  const auto p = std::get<HarmonicParams>(bcx::solve_params(harmonic(2.0, SolutionType::I)));
  EXPECT_DOUBLE_EQ(p.alpha, 0.25);
  EXPECT_EQ(p.beta, 0.0);
  EXPECT_EQ(p.gamma, 0.0);
  EXPECT_EQ(p.delta, 0.0);
  const auto p2 = std::get<HarmonicParams>(
      bcx::solve_params(harmonic(2.0, SolutionType::II, SignBranch::Minus)));
  EXPECT_DOUBLE_EQ(p2.delta, -0.5);
}

TEST(SolveParams, IsotonicExamples) {
  const auto p = std::get<IsotonicParams>(bcx::solve_params(isotonic(2.0, 6.0, SolutionType::I)));
  EXPECT_DOUBLE_EQ(p.beta[2], 3.0 / 8.0);
  EXPECT_DOUBLE_EQ(p.beta[3], 3.0 / 8.0);
  EXPECT_DOUBLE_EQ(p.alpha[0], 0.25);
  const auto pd = std::get<IsotonicParams>(bcx::solve_params(isotonic(2.0, -2.0, SolutionType::I)));
  EXPECT_DOUBLE_EQ(pd.beta[2], 1.0 / 8.0);  // double root at b = -2
  EXPECT_DOUBLE_EQ(pd.beta[3], 1.0 / 8.0);
}

TEST(SolveParams, RejectsInvalidCouplings) {
  EXPECT_THROW((void)bcx::solve_params(harmonic(-1.0, SolutionType::I)), bcx::InvalidCoupling);
  EXPECT_THROW((void)bcx::solve_params(harmonic(0.0, SolutionType::I)), bcx::InvalidCoupling);
  EXPECT_THROW((void)bcx::solve_params(inverted(-2.0, SolutionType::I)), bcx::InvalidCoupling);
  EXPECT_THROW((void)bcx::solve_params(isotonic(2.0, -3.0, SolutionType::I)), bcx::InvalidCoupling);
  EXPECT_THROW((void)bcx::solve_params(isotonic(2.0, 0.0, SolutionType::I)), bcx::InvalidCoupling);
}

TEST(SolveParams, ConstraintResidualsVanishForAllFamilies) {
  for (SolutionType t : {SolutionType::I, SolutionType::II}) {
    for (SignBranch sgn : {SignBranch::Plus, SignBranch::Minus}) {
      for (const ModelSpec& spec :
           {harmonic(2.0, t, sgn), harmonic(0.7, t, sgn), inverted(2.0, t, sgn),
            isotonic(2.0, 6.0, t, sgn), isotonic(1.3, -1.5, t, sgn),
            isotonic(2.0, 6.0, t, sgn, SignBranch::Plus, SignBranch::Minus)}) {
        const auto params = bcx::solve_params(spec);
        for (double r : bcx::constraint_residuals(spec, params))
          EXPECT_LE(std::abs(r), 1e-12) << bcx::family_name(spec.family);
      }
    }
  }
}

TEST(BuildState, PredictedEnergies) {
  EXPECT_EQ(bcx::build_state(harmonic(2.0, SolutionType::I)).energy,
            (bcx::EnergyQuad{-4, 0, 0, 0}));
  EXPECT_EQ(bcx::build_state(harmonic(2.0, SolutionType::II)).energy,
            (bcx::EnergyQuad{0, 0, 0, -4}));
  EXPECT_EQ(bcx::build_state(harmonic(2.0, SolutionType::I, SignBranch::Minus)).energy,
            (bcx::EnergyQuad{4, 0, 0, 0}));
  EXPECT_EQ(bcx::build_state(inverted(2.0, SolutionType::I)).energy,
            (bcx::EnergyQuad{0, 0, 4, 0}));
  EXPECT_EQ(bcx::build_state(inverted(2.0, SolutionType::II)).energy,
            (bcx::EnergyQuad{0, 4, 0, 0}));
  const auto iso = bcx::build_state(isotonic(2.0, 6.0, SolutionType::I));
  EXPECT_NEAR(iso.energy.e1, -16.0, 1e-13);
  EXPECT_NEAR(iso.energy.e2, 0.0, 1e-13);
  EXPECT_NEAR(iso.energy.e3, 0.0, 1e-13);
  EXPECT_NEAR(iso.energy.e4, 0.0, 1e-13);
  const auto iso2 = bcx::build_state(isotonic(2.0, 6.0, SolutionType::II));
  EXPECT_NEAR(iso2.energy.e4, -16.0, 1e-13);
  EXPECT_NEAR(iso2.energy.e1, 0.0, 1e-13);
}

TEST(BuildState, IsotonicUnequalBranchesShiftE4) {
  const auto st =
      bcx::build_state(isotonic(2.0, 6.0, SolutionType::I, SignBranch::Plus, SignBranch::Plus,
                                SignBranch::Minus));
  const auto& p = std::get<IsotonicParams>(st.params);
  EXPECT_NEAR(st.energy.e4, -64.0 * p.alpha[0] * (p.beta[2] - p.beta[3]), 1e-13);
  EXPECT_NE(st.energy.e4, 0.0);
}

TEST(Psi, OriginOfHarmonicStateIsUnit) {
  const auto st = bcx::build_state(harmonic(2.0, SolutionType::I));
  const auto c = psi_components(st, {0, 0, 0, 0});
  EXPECT_EQ(c, (std::array<double, 4>{1, 0, 0, 0}));
}

TEST(Psi, IsotonicRejectsExcludedPoint) {
  const auto st = bcx::build_state(isotonic(2.0, 6.0, SolutionType::I));
  EXPECT_THROW((void)psi_components(st, {0, 0, 0, 0}), bcx::SingularPhasePoint);
  EXPECT_FALSE(st.admissible({0.5, 0.2, 0.2, -0.5}));  // u = v = 0
  EXPECT_TRUE(st.admissible({0.8, 0.2, -0.3, 0.1}));
}

TEST(Psi, HarmonicTypeIMatchesDisplayedComponents) {
  const double a = 2.0;
  const auto st = bcx::build_state(harmonic(a, SolutionType::I));
  const double r = std::sqrt(a / 2.0);
  Sampler s;
  for (int k = 0; k < 40; ++k) {
    const PhasePoint p = s.point();
    const double q = p.x1 * p.x1 - p.p1 * p.p1 - p.p2 * p.p2 + p.x2 * p.x2;
    const double b4 = p.x1 * p.x2 + p.p1 * p.p2;
    const double ang1 = 0.5 * r * (p.x1 * p.p1 - p.x1 * p.p2 + p.p1 * p.x2 - p.p2 * p.x2);
    const double ang2 = 0.5 * r * (p.x1 * p.p1 + p.x1 * p.p2 - p.p1 * p.x2 - p.p2 * p.x2);
    const double e0 = std::exp(0.25 * r * q);
    const double ep = std::exp(0.5 * r * b4), em = std::exp(-0.5 * r * b4);
    const auto c = psi_components(st, p);
    EXPECT_NEAR(c[0], 0.5 * e0 * (ep * std::cos(ang1) + em * std::cos(ang2)), 1e-12);
    EXPECT_NEAR(c[1], 0.5 * e0 * (ep * std::sin(ang1) + em * std::sin(ang2)), 1e-12);
    EXPECT_NEAR(c[2], 0.5 * e0 * (-ep * std::sin(ang1) + em * std::sin(ang2)), 1e-12);
    EXPECT_NEAR(c[3], 0.5 * e0 * (ep * std::cos(ang1) - em * std::cos(ang2)), 1e-12);
  }
}

TEST(Psi, InvertedTypeIMatchesDisplayedComponents) {
  const double b = 2.0;
  const auto st = bcx::build_state(inverted(b, SolutionType::I));
  const double r = std::sqrt(b / 2.0);
  Sampler s;
  for (int k = 0; k < 40; ++k) {
    const PhasePoint p = s.point();
    const double q = p.x1 * p.x1 - p.p1 * p.p1 - p.p2 * p.p2 + p.x2 * p.x2;
    const double b4 = p.x1 * p.x2 + p.p1 * p.p2;
    const double e1 = std::exp(0.5 * r * (-p.x1 * p.p1 + p.x1 * p.p2 - p.p1 * p.x2 + p.p2 * p.x2));
    const double a1 = 0.25 * r * q + 0.5 * r * b4;
    const double e2 = std::exp(0.5 * r * (p.x1 * p.p1 + p.x1 * p.p2 - p.p1 * p.x2 - p.p2 * p.x2));
    const double a2 = -0.25 * r * q + 0.5 * r * b4;
    const auto c = psi_components(st, p);
    EXPECT_NEAR(c[0], 0.5 * (e1 * std::cos(a1) + e2 * std::cos(a2)), 1e-12);
    EXPECT_NEAR(c[1], 0.5 * (e1 * std::sin(a1) + e2 * std::sin(a2)), 1e-12);
    EXPECT_NEAR(c[2], 0.5 * (-e1 * std::sin(a1) + e2 * std::sin(a2)), 1e-12);
    EXPECT_NEAR(c[3], 0.5 * (e1 * std::cos(a1) - e2 * std::cos(a2)), 1e-12);
  }
}

TEST(Psi, ReconstructionIdentity) {
  Sampler s;
  for (const ModelSpec spec :
       {harmonic(2.0, SolutionType::I), harmonic(2.0, SolutionType::II),
        inverted(2.0, SolutionType::I), isotonic(2.0, 6.0, SolutionType::II)}) {
    const auto st = bcx::build_state(spec);
    int done = 0;
    while (done < 30) {
      const PhasePoint pt = s.point();
      if (!st.admissible(pt)) continue;
      ++done;
      const auto c = psi_components(st, pt);
      const double g1r = st.g_combos[0].value(pt), g1i = st.g_combos[1].value(pt);
      const double g2r = st.g_combos[2].value(pt), g2i = st.g_combos[3].value(pt);
      EXPECT_NEAR(c[0] + c[3], std::exp(g1r) * std::cos(g1i), 1e-12);
      EXPECT_NEAR(c[1] - c[2], std::exp(g1r) * std::sin(g1i), 1e-12);
      EXPECT_NEAR(c[0] - c[3], std::exp(g2r) * std::cos(g2i), 1e-12);
      EXPECT_NEAR(c[1] + c[2], std::exp(g2r) * std::sin(g2i), 1e-12);
    }
  }
}

TEST(BuildState, IsotonicLowerBranchRecoversHarmonicAsBVanishes) {
  const auto lower = bcx::build_state(isotonic(2.0, 1e-6, SolutionType::I, SignBranch::Plus,
                                               SignBranch::Minus, SignBranch::Minus));
  const auto harm = bcx::build_state(harmonic(2.0, SolutionType::I));
  EXPECT_NEAR(lower.energy.e1, harm.energy.e1, 1e-4);
  EXPECT_NEAR(lower.energy.e4, harm.energy.e4, 1e-4);
}
