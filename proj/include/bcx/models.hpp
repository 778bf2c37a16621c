#pragma once

// The three oscillator models on the extended phase space: potential
// components, the Cauchy-Riemann-chained G ansatz, parameter constraints and
// the Type I / Type II closed-form ground states.
//
// Every G and g field is a linear combination of eight basis terms over
// u = x1+x2, v = p1-p2, s = x1-x2, t = p1+p2:
//   Q  = x1^2 - p1^2 - p2^2 + x2^2
//   B2 = x1 p1 - x2 p2,  B3 = x1 p2 - x2 p1,  B4 = x1 x2 + p1 p2
//   AT1 = atan(u/v),  AT2 = atan(s/t)
//   LG1 = log(u^2+v^2),  LG2 = log(s^2+t^2)

#include <array>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"
#include "bcx/phase_space.hpp"
#include "bcx/scalar_field.hpp"

namespace bcx {

enum class Family { Harmonic, Inverted, Isotonic };
enum class SolutionType { I, II };
enum class SignBranch : int { Plus = 1, Minus = -1 };

struct ModelSpec {
  Family family = Family::Harmonic;
  double a = 0.0;
  double b = 0.0;
  SolutionType type = SolutionType::I;
  SignBranch sign = SignBranch::Plus;
  SignBranch beta3_branch = SignBranch::Plus;  // isotonic only
  SignBranch beta4_branch = SignBranch::Plus;
};

inline void validate(const ModelSpec& spec) {
  switch (spec.family) {
    case Family::Harmonic:
      if (!(spec.a > 0.0)) throw InvalidCoupling("harmonic requires a > 0");
      break;
    case Family::Inverted:
      if (!(spec.b > 0.0)) throw InvalidCoupling("inverted requires b > 0");
      break;
    case Family::Isotonic:
      if (!(spec.a > 0.0)) throw InvalidCoupling("isotonic requires a > 0");
      if (!(spec.b >= -2.0)) throw InvalidCoupling("isotonic requires b >= -2");
      if (spec.b == 0.0) throw InvalidCoupling("isotonic requires b != 0");
      break;
  }
}

[[nodiscard]] inline std::string family_name(Family f) {
  switch (f) {
    case Family::Harmonic: return "harmonic";
    case Family::Inverted: return "inverted";
    default: return "isotonic";
  }
}

// ---- basis combinations ----

struct BasisCombo {
  // coefficients of Q, B2, B3, B4, AT1, AT2, LG1, LG2
  std::array<double, 8> c{};

  [[nodiscard]] bool has_plane1_cut() const { return c[4] != 0.0; }  // atan(u/v) cut at v = 0
  [[nodiscard]] bool has_plane2_cut() const { return c[5] != 0.0; }  // atan(s/t) cut at t = 0
  [[nodiscard]] bool has_plane1_pole() const { return c[4] != 0.0 || c[6] != 0.0; }
  [[nodiscard]] bool has_plane2_pole() const { return c[5] != 0.0 || c[7] != 0.0; }

  [[nodiscard]] BasisCombo operator+(const BasisCombo& o) const {
    BasisCombo r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  [[nodiscard]] BasisCombo operator-(const BasisCombo& o) const {
    BasisCombo r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }

  [[nodiscard]] double value(const PhasePoint& p) const {
    double r = c[0] * (p.x1 * p.x1 - p.p1 * p.p1 - p.p2 * p.p2 + p.x2 * p.x2) +
               c[1] * (p.x1 * p.p1 - p.x2 * p.p2) + c[2] * (p.x1 * p.p2 - p.x2 * p.p1) +
               c[3] * (p.x1 * p.x2 + p.p1 * p.p2);
    if (c[4] != 0.0 || c[6] != 0.0) {
      const double u = p.x1 + p.x2, v = p.p1 - p.p2;
      if (c[4] != 0.0) r += c[4] * std::atan(u / v);
      if (c[6] != 0.0) r += c[6] * std::log(u * u + v * v);
    }
    if (c[5] != 0.0 || c[7] != 0.0) {
      const double s = p.x1 - p.x2, t = p.p1 + p.p2;
      if (c[5] != 0.0) r += c[5] * std::atan(s / t);
      if (c[7] != 0.0) r += c[7] * std::log(s * s + t * t);
    }
    return r;
  }

  [[nodiscard]] Vec4 gradient(const PhasePoint& p) const {
    Vec4 g{};
    auto axpy = [&g](double w, const Vec4& d) {
      for (int i = 0; i < 4; ++i) g[i] += w * d[i];
    };
    axpy(c[0], {2 * p.x1, -2 * p.p1, -2 * p.p2, 2 * p.x2});
    axpy(c[1], {p.p1, p.x1, -p.x2, -p.p2});
    axpy(c[2], {p.p2, -p.x2, p.x1, -p.p1});
    axpy(c[3], {p.x2, p.p2, p.p1, p.x1});
    if (c[4] != 0.0 || c[6] != 0.0) {
      const double u = p.x1 + p.x2, v = p.p1 - p.p2, r2 = u * u + v * v;
      static constexpr Vec4 du{1, 0, 0, 1}, dv{0, 1, -1, 0};
      for (int i = 0; i < 4; ++i) {
        if (c[4] != 0.0) g[i] += c[4] * (v * du[i] - u * dv[i]) / r2;
        if (c[6] != 0.0) g[i] += c[6] * 2.0 * (u * du[i] + v * dv[i]) / r2;
      }
    }
    if (c[5] != 0.0 || c[7] != 0.0) {
      const double s = p.x1 - p.x2, t = p.p1 + p.p2, r2 = s * s + t * t;
      static constexpr Vec4 ds{1, 0, 0, -1}, dt{0, 1, 1, 0};
      for (int i = 0; i < 4; ++i) {
        if (c[5] != 0.0) g[i] += c[5] * (t * ds[i] - s * dt[i]) / r2;
        if (c[7] != 0.0) g[i] += c[7] * 2.0 * (s * ds[i] + t * dt[i]) / r2;
      }
    }
    return g;
  }

  [[nodiscard]] Mat4 hessian(const PhasePoint& p) const {
    Mat4 h{};
    // quadratic basis
    const double d0[4] = {2, -2, -2, 2};
    for (int i = 0; i < 4; ++i) h[i][i] += c[0] * d0[i];
    h[0][1] += c[1]; h[1][0] += c[1]; h[2][3] -= c[1]; h[3][2] -= c[1];
    h[0][2] += c[2]; h[2][0] += c[2]; h[1][3] -= c[2]; h[3][1] -= c[2];
    h[0][3] += c[3]; h[3][0] += c[3]; h[1][2] += c[3]; h[2][1] += c[3];
    auto plane = [&h](double cat, double clg, double u, double v, const Vec4& du, const Vec4& dv) {
      const double r2 = u * u + v * v, r4 = r2 * r2;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          if (cat != 0.0) {
            const double ni = v * du[i] - u * dv[i];
            h[i][j] += cat * ((dv[j] * du[i] - du[j] * dv[i]) / r2 -
                              ni * 2.0 * (u * du[j] + v * dv[j]) / r4);
          }
          if (clg != 0.0) {
            h[i][j] += clg * (2.0 * (du[i] * du[j] + dv[i] * dv[j]) / r2 -
                              4.0 * (u * du[i] + v * dv[i]) * (u * du[j] + v * dv[j]) / r4);
          }
        }
    };
    if (c[4] != 0.0 || c[6] != 0.0)
      plane(c[4], c[6], p.x1 + p.x2, p.p1 - p.p2, {1, 0, 0, 1}, {0, 1, -1, 0});
    if (c[5] != 0.0 || c[7] != 0.0)
      plane(c[5], c[7], p.x1 - p.x2, p.p1 + p.p2, {1, 0, 0, -1}, {0, 1, 1, 0});
    return h;
  }

  [[nodiscard]] ScalarField to_field() const {
    const BasisCombo self = *this;
    return {[self](const PhasePoint& pt) { return self.value(pt); },
            [self](const PhasePoint& pt) { return self.gradient(pt); },
            [self](const PhasePoint& pt) { return self.hessian(pt); }};
  }
};

// ---- parameters and the G chain ----

struct HarmonicParams {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
};

struct IsotonicParams {
  std::array<double, 4> alpha{};  // alpha1..alpha4
  std::array<double, 4> beta{};   // beta1..beta4
};

using ModelParams = std::variant<HarmonicParams, IsotonicParams>;

// G2, G3, G4 are forced from G1 by the three Cauchy-Riemann condition sets;
// these are their closed forms.  Returns {G1, G2, G3, G4}.
[[nodiscard]] inline std::array<BasisCombo, 4> derive_G_chain(const HarmonicParams& p) {
  const double al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
  return {BasisCombo{{al, be, ga, de}},
          BasisCombo{{-be / 2, 2 * al, -de, ga}},
          BasisCombo{{-ga / 2, -de, 2 * al, be}},
          BasisCombo{{de / 2, -ga, -be, 2 * al}}};
}

[[nodiscard]] inline std::array<BasisCombo, 4> derive_G_chain(const IsotonicParams& p) {
  const auto& a = p.alpha;
  const auto& b = p.beta;
  return {BasisCombo{{a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]}},
          BasisCombo{{-a[1] / 2, 2 * a[0], -a[3], a[2], -2 * b[2], -2 * b[3], b[0] / 2, b[1] / 2}},
          BasisCombo{{-a[2] / 2, -a[3], 2 * a[0], a[1], 2 * b[2], -2 * b[3], -b[0] / 2, b[1] / 2}},
          BasisCombo{{a[3] / 2, -a[2], -a[1], 2 * a[0], b[0], -b[1], b[2], -b[3]}}};
}

// g1r = G1+G4, g2r = G1-G4, g1i = G2-G3, g2i = G2+G3; order {g1r, g1i, g2r, g2i}.
[[nodiscard]] inline std::array<BasisCombo, 4> g_field_combos(const ModelParams& params) {
  const auto G = std::visit([](const auto& p) { return derive_G_chain(p); }, params);
  return {G[0] + G[3], G[1] - G[2], G[0] - G[3], G[1] + G[2]};
}

// ---- constraint system ----

[[nodiscard]] inline double effective_a(const ModelSpec& spec) {
  return spec.family == Family::Inverted ? -spec.b : spec.a;
}

// Harmonic/inverted: 4a^2 - b^2 - g^2 + d^2 = a_eff/8 and the three bilinear
// relations.  Isotonic: alpha2 = alpha3 = 0, 4a1^2 + a4^2 = a/8, a1 a4 = 0,
// 4b3^2 - b1^2 - b3 = 4b4^2 - b2^2 - b4 = b/32, b1(8b3 - 1) = b2(8b4 - 1) = 0.
[[nodiscard]] inline std::vector<double> constraint_residuals(const ModelSpec& spec,
                                                              const ModelParams& params) {
  if (const auto* h = std::get_if<HarmonicParams>(&params)) {
    const double al = h->alpha, be = h->beta, ga = h->gamma, de = h->delta;
    return {4 * al * al - be * be - ga * ga + de * de - effective_a(spec) / 8.0,
            2 * al * de + be * ga, 2 * al * be - ga * de, 2 * al * ga - be * de};
  }
  const auto& p = std::get<IsotonicParams>(params);
  const auto& a = p.alpha;
  const auto& b = p.beta;
  return {a[1],
          a[2],
          4 * a[0] * a[0] + a[3] * a[3] - spec.a / 8.0,
          a[0] * a[3],
          4 * b[2] * b[2] - b[0] * b[0] - b[2] - spec.b / 32.0,
          4 * b[3] * b[3] - b[1] * b[1] - b[3] - spec.b / 32.0,
          b[0] * (8 * b[2] - 1),
          b[1] * (8 * b[3] - 1)};
}

[[nodiscard]] inline ModelParams solve_params(const ModelSpec& spec) {
  validate(spec);
  const double sgn = static_cast<double>(spec.sign);
  switch (spec.family) {
    case Family::Harmonic: {
      HarmonicParams p;
      const double r = std::sqrt(spec.a / 2.0);
      if (spec.type == SolutionType::I)
        p.alpha = sgn * 0.25 * r;
      else
        p.delta = sgn * 0.5 * r;
      return p;
    }
    case Family::Inverted: {
      HarmonicParams p;
      const double r = std::sqrt(spec.b / 2.0);
      if (spec.type == SolutionType::I)
        p.gamma = sgn * 0.5 * r;
      else
        p.beta = sgn * 0.5 * r;
      return p;
    }
    default: {
      IsotonicParams p;
      const double r = std::sqrt(spec.a) / std::sqrt(2.0);
      if (spec.type == SolutionType::I)
        p.alpha[0] = sgn * r / 4.0;
      else
        p.alpha[3] = sgn * r / 2.0;
      const double disc = std::sqrt(1.0 + spec.b / 2.0);
      p.beta[2] = (1.0 + static_cast<double>(spec.beta3_branch) * disc) / 8.0;
      p.beta[3] = (1.0 + static_cast<double>(spec.beta4_branch) * disc) / 8.0;
      return p;
    }
  }
}

// ---- energies ----

struct EnergyQuad {
  double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0;
  [[nodiscard]] bool operator==(const EnergyQuad& o) const = default;
  [[nodiscard]] Bicomplex to_bicomplex() const { return {e1, e2, e3, e4}; }
};

[[nodiscard]] inline EnergyQuad predicted_energy(const ModelParams& params) {
  if (const auto* h = std::get_if<HarmonicParams>(&params))
    return {-16 * h->alpha, 8 * h->beta, 8 * h->gamma, -8 * h->delta};
  const auto& p = std::get<IsotonicParams>(params);
  const double a1 = p.alpha[0], a4 = p.alpha[3];
  const double b1 = p.beta[0], b2 = p.beta[1], b3 = p.beta[2], b4 = p.beta[3];
  const double kp = 2 * a1 + a4, km = 2 * a1 - a4;
  return {-4 * ((1 + 8 * b3) * kp + (1 + 8 * b4) * km),
          -16 * b1 * kp - 16 * b2 * km,
          16 * b1 * kp - 16 * b2 * km,
          -4 * ((1 + 8 * b3) * kp - (1 + 8 * b4) * km)};
}

// ---- potential components ----

inline constexpr double kExclusionR2 = 0.25;  // squared radius around each projected pole

// The four real components of V(x) = a x^2 (+ b / x^2 for the isotonic case);
// the inverted oscillator is a x^2 with a -> -b.
[[nodiscard]] inline std::array<double, 4> potential_components(const ModelSpec& spec,
                                                                const PhasePoint& p,
                                                                double exclusion_r2 = kExclusionR2) {
  const double a = effective_a(spec);
  const double q = p.x1 * p.x1 - p.p1 * p.p1 - p.p2 * p.p2 + p.x2 * p.x2;
  std::array<double, 4> V{a * q, 2 * a * (p.x1 * p.p1 - p.x2 * p.p2),
                          2 * a * (p.x1 * p.p2 - p.x2 * p.p1),
                          2 * a * (p.x1 * p.x2 + p.p1 * p.p2)};
  if (spec.family == Family::Isotonic) {
    const double u = p.x1 + p.x2, v = p.p1 - p.p2, s = p.x1 - p.x2, t = p.p1 + p.p2;
    const double r1 = u * u + v * v, r2 = s * s + t * t;
    if (r1 < exclusion_r2 || r2 < exclusion_r2)
      throw SingularPhasePoint("isotonic potential: projected coordinate inside exclusion radius");
    const double b = spec.b;
    V[0] += b / 2 * ((u * u - v * v) / (r1 * r1) + (s * s - t * t) / (r2 * r2));
    V[1] += -b * (u * v / (r1 * r1) + s * t / (r2 * r2));
    V[2] += b * (u * v / (r1 * r1) - s * t / (r2 * r2));
    V[3] += b / 2 * ((u * u - v * v) / (r1 * r1) - (s * s - t * t) / (r2 * r2));
  }
  return V;
}

[[nodiscard]] inline Bicomplex potential_value(const ModelSpec& spec, const PhasePoint& p,
                                               double exclusion_r2 = kExclusionR2) {
  const auto V = potential_components(spec, p, exclusion_r2);
  return {V[0], V[1], V[2], V[3]};
}

// ---- closed-form states ----

struct ClosedFormState {
  ModelSpec spec;
  ModelParams params;
  std::array<BasisCombo, 4> g_combos;  // g1r, g1i, g2r, g2i
  std::array<ScalarField, 4> g;
  EnergyQuad energy;
  double exclusion_r2 = kExclusionR2;

  [[nodiscard]] bool needs_plane1_exclusion() const {
    for (const auto& c : g_combos)
      if (c.has_plane1_pole()) return true;
    return spec.family == Family::Isotonic;
  }
  [[nodiscard]] bool needs_plane2_exclusion() const {
    for (const auto& c : g_combos)
      if (c.has_plane2_pole()) return true;
    return spec.family == Family::Isotonic;
  }

  [[nodiscard]] bool admissible(const PhasePoint& p) const {
    const double u = p.x1 + p.x2, v = p.p1 - p.p2, s = p.x1 - p.x2, t = p.p1 + p.p2;
    if (needs_plane1_exclusion() && u * u + v * v < exclusion_r2) return false;
    if (needs_plane2_exclusion() && s * s + t * t < exclusion_r2) return false;
    return true;
  }

  // Safe for finite-difference stencils of reach h: also keeps away from the
  // atan branch cuts (v = 0 resp. t = 0), where the fields jump.
  [[nodiscard]] bool stencil_safe(const PhasePoint& p, double h) const {
    if (!admissible(p)) return false;
    bool cut1 = false, cut2 = false;
    for (const auto& c : g_combos) {
      cut1 = cut1 || c.has_plane1_cut();
      cut2 = cut2 || c.has_plane2_cut();
    }
    if (cut1 && std::abs(p.p1 - p.p2) <= 2 * h) return false;
    if (cut2 && std::abs(p.p1 + p.p2) <= 2 * h) return false;
    return true;
  }

  [[nodiscard]] Grid default_grid(double range = 1.5, int n = 7) const {
    Grid grid = Grid::symmetric(range, n);
    const ClosedFormState* self = this;
    grid.excluded = [self](const PhasePoint& pt) { return !self->admissible(pt); };
    return grid;
  }
};

[[nodiscard]] inline ClosedFormState build_state(const ModelSpec& spec, const ModelParams& params) {
  ClosedFormState st;
  st.spec = spec;
  st.params = params;
  st.g_combos = g_field_combos(params);
  for (int i = 0; i < 4; ++i) st.g[i] = st.g_combos[i].to_field();
  st.energy = predicted_energy(params);
  return st;
}

[[nodiscard]] inline ClosedFormState build_state(const ModelSpec& spec) {
  return build_state(spec, solve_params(spec));
}

// psi1 = (e^{g1r} cos g1i + e^{g2r} cos g2i)/2, and cyclic per the component
// expansion of e^{g1 e1 + g2 e2}.
[[nodiscard]] inline std::array<double, 4> psi_components(const ClosedFormState& st,
                                                          const PhasePoint& pt) {
  if (!st.admissible(pt)) throw SingularPhasePoint("psi evaluated inside the exclusion radius");
  const double g1r = st.g_combos[0].value(pt), g1i = st.g_combos[1].value(pt);
  const double g2r = st.g_combos[2].value(pt), g2i = st.g_combos[3].value(pt);
  const double e1 = std::exp(g1r), e2 = std::exp(g2r);
  return {0.5 * (e1 * std::cos(g1i) + e2 * std::cos(g2i)),
          0.5 * (e1 * std::sin(g1i) + e2 * std::sin(g2i)),
          0.5 * (-e1 * std::sin(g1i) + e2 * std::sin(g2i)),
          0.5 * (e1 * std::cos(g1i) - e2 * std::cos(g2i))};
}

[[nodiscard]] inline Bicomplex psi_value(const ClosedFormState& st, const PhasePoint& pt) {
  const auto c = psi_components(st, pt);
  return {c[0], c[1], c[2], c[3]};
}

// The four component fields with analytic partials, for derivative checks.
[[nodiscard]] inline std::array<ScalarField, 4> psi_fields(const ClosedFormState& st) {
  const ScalarField A1 = exp_cos(st.g[0], st.g[1]);
  const ScalarField B1 = exp_sin(st.g[0], st.g[1]);
  const ScalarField A2 = exp_cos(st.g[2], st.g[3]);
  const ScalarField B2 = exp_sin(st.g[2], st.g[3]);
  return {scale(0.5, add(A1, A2)), scale(0.5, add(B1, B2)),
          scale(0.5, add(scale(-1.0, B1), B2)), scale(0.5, add(A1, scale(-1.0, A2)))};
}

}  // namespace bcx
