#pragma once

// The energy functionals in psi form (quotients of F-images of the component
// combinations) and in g form (first/second partials of the four g fields),
// the analogous-Schrodinger-equation residual, and physical-energy assembly
// with the bicomplex deformation parameter xi.

#include <array>
#include <cmath>
#include <complex>

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"
#include "bcx/models.hpp"
#include "bcx/phase_space.hpp"
#include "bcx/scalar_field.hpp"

namespace bcx {

struct XiSpec {
  double xi1 = 1.0, xi2 = 1.0;  // both positive; PT modes assume xi1 = xi2

  void validate() const {
    if (!(xi1 > 0.0) || !(xi2 > 0.0)) throw InvalidCoupling("xi components must be positive");
  }

  // xi^2 = (xi1^2 + xi2^2)/2 + i*ih (xi1^2 - xi2^2)/2
  [[nodiscard]] Bicomplex squared() const {
    return {0.5 * (xi1 * xi1 + xi2 * xi2), 0.0, 0.0, 0.5 * (xi1 * xi1 - xi2 * xi2)};
  }
};

// E tilde = (1/16) xi^2 (E1 + i E2 + ih E3 + i*ih E4)
[[nodiscard]] inline Bicomplex physical_energy(const EnergyQuad& e, const XiSpec& xi) {
  xi.validate();
  return xi.squared() * e.to_bicomplex() * (1.0 / 16.0);
}

// Energy components from the quotient expressions over the combinations
// A = psi1+psi4, B = psi2-psi3, C = psi1-psi4, D = psi2+psi3.
[[nodiscard]] inline EnergyQuad energy_from_psi(const ClosedFormState& st, const PhasePoint& pt,
                                                EvalMode mode, const FDScheme& scheme = {},
                                                double den_eps = 1e-10) {
  if (!st.admissible(pt)) throw SingularPhasePoint("energy_from_psi: inadmissible point");
  const auto psi = psi_fields(st);
  const ScalarField A = add(psi[0], psi[3]);
  const ScalarField B = add(psi[1], scale(-1.0, psi[2]));
  const ScalarField C = add(psi[0], scale(-1.0, psi[3]));
  const ScalarField D = add(psi[1], psi[2]);

  const double a = A.value(pt), b = B.value(pt), c = C.value(pt), d = D.value(pt);
  const double dab = a * a + b * b, dcd = c * c + d * d;
  if (dab < den_eps || dcd < den_eps)
    throw DegenerateDenominator("energy_from_psi: vanishing component combination");

  const double Fa = apply_F(A, pt, mode, scheme), Fb = apply_F(B, pt, mode, scheme);
  const double Fc = apply_F(C, pt, mode, scheme), Fd = apply_F(D, pt, mode, scheme);
  const auto V = potential_components(st.spec, pt, st.exclusion_r2);

  const double sym1 = (a * Fa + b * Fb) / dab, skew1 = (a * Fb - b * Fa) / dab;
  const double sym2 = (c * Fc + d * Fd) / dcd, skew2 = (c * Fd - d * Fc) / dcd;
  return {V[0] + 0.5 * (sym1 + sym2), V[1] + 0.5 * (skew1 + skew2),
          V[2] + 0.5 * (skew2 - skew1), V[3] + 0.5 * (sym1 - sym2)};
}

// Energy components from the g-field partials, weights (-7, 3, 1, -5) over
// (x1, p1, p2, x2):
//   E1/E4 brackets: sum_c w_c [g_r'' + (g_r')^2 - (g_i')^2]
//   E2/E3 brackets: sum_c w_c [g_i''/2 + g_r' g_i']
[[nodiscard]] inline EnergyQuad energy_from_g(const ClosedFormState& st, const PhasePoint& pt) {
  if (!st.admissible(pt)) throw SingularPhasePoint("energy_from_g: inadmissible point");
  static constexpr std::array<double, 4> w{-7.0, 3.0, 1.0, -5.0};

  const Vec4 d1r = st.g_combos[0].gradient(pt), d1i = st.g_combos[1].gradient(pt);
  const Vec4 d2r = st.g_combos[2].gradient(pt), d2i = st.g_combos[3].gradient(pt);
  const Mat4 h1r = st.g_combos[0].hessian(pt), h1i = st.g_combos[1].hessian(pt);
  const Mat4 h2r = st.g_combos[2].hessian(pt), h2i = st.g_combos[3].hessian(pt);

  double r1 = 0.0, r2 = 0.0, i1 = 0.0, i2 = 0.0;
  for (int c = 0; c < 4; ++c) {
    r1 += w[c] * (h1r[c][c] + d1r[c] * d1r[c] - d1i[c] * d1i[c]);
    r2 += w[c] * (h2r[c][c] + d2r[c] * d2r[c] - d2i[c] * d2i[c]);
    i1 += w[c] * (0.5 * h1i[c][c] + d1r[c] * d1i[c]);
    i2 += w[c] * (0.5 * h2i[c][c] + d2r[c] * d2i[c]);
  }
  const auto V = potential_components(st.spec, pt, st.exclusion_r2);
  return {V[0] + 0.25 * (r1 + r2), V[1] + 0.5 * (i2 + i1), V[2] + 0.5 * (i2 - i1),
          V[3] + 0.25 * (r1 - r2)};
}

namespace detail {

// g restricted to its projected complex plane; rep1 realizes w1 = u + iv,
// rep2 realizes w2 = s + it.
[[nodiscard]] inline std::complex<double> g_slot(const ClosedFormState& st, int slot,
                                                 std::complex<double> w) {
  PhasePoint pt;
  if (slot == 1)
    pt = {0.5 * w.real(), 0.5 * w.imag(), -0.5 * w.imag(), 0.5 * w.real()};
  else
    pt = {0.5 * w.real(), 0.5 * w.imag(), 0.5 * w.imag(), -0.5 * w.real()};
  const int r = slot == 1 ? 0 : 2, i = slot == 1 ? 1 : 3;
  return {st.g_combos[r].value(pt), st.g_combos[i].value(pt)};
}

[[nodiscard]] inline std::complex<double> f_slot(const ClosedFormState& st, int slot,
                                                 std::complex<double> w) {
  return std::exp(g_slot(st, slot, w));
}

}  // namespace detail

// || -1/2 psi'' + (1/16)(V - E) psi || with psi assembled from the two
// holomorphic slot functions over the projected coordinates and psi''
// computed by complex central differences along the real direction
// (which never crosses the atan branch cuts).
[[nodiscard]] inline double ase_residual_with_energy(const ClosedFormState& st, const XiSpec& xi,
                                                     const PhasePoint& pt, const EnergyQuad& energy,
                                                     double h = 1e-3) {
  xi.validate();
  if (!st.admissible(pt)) throw SingularPhasePoint("ase_residual: inadmissible point");
  const auto [w1, w2] = projected_coordinates(pt);

  if (st.needs_plane1_exclusion() || st.needs_plane2_exclusion()) {
    // the stencil may leave the exclusion disc's boundary slightly, but must
    // stay clear of the pole itself
    const double r1 = std::abs(w1), r2 = std::abs(w2), floor = 0.5 * std::sqrt(st.exclusion_r2);
    if ((st.needs_plane1_exclusion() && r1 - h <= floor) ||
        (st.needs_plane2_exclusion() && r2 - h <= floor))
      throw DegenerateProjection("ase_residual: stencil approaches a projected pole");
  }

  const auto d2 = [&](int slot, std::complex<double> w) {
    return (detail::f_slot(st, slot, w + h) - 2.0 * detail::f_slot(st, slot, w) +
            detail::f_slot(st, slot, w - h)) /
           (h * h);
  };
  const Bicomplex psi = join({detail::f_slot(st, 1, w1), detail::f_slot(st, 2, w2)});
  const Bicomplex psi_dd = join({d2(1, w1), d2(2, w2)});
  const Bicomplex V = potential_value(st.spec, pt, st.exclusion_r2);
  const Bicomplex r = -0.5 * psi_dd + (V - energy.to_bicomplex()) * psi * (1.0 / 16.0);
  return euclid_norm(r);
}

[[nodiscard]] inline double ase_residual(const ClosedFormState& st, const XiSpec& xi,
                                         const PhasePoint& pt, double h = 1e-3) {
  return ase_residual_with_energy(st, xi, pt, st.energy, h);
}

}  // namespace bcx
