#pragma once

// Parity and the three extended time-reversal operators, plus the
// broken/unbroken classification of model states.  Each operator pairs a
// phase-space map with a conjugation acting on bicomplex values:
//   P:     (x1,p1,p2,x2) -> (-x1,-p1,-p2,-x2), no conjugation
//   Ti:    (x1,-p1,p2,-x2) with dag1
//   Tihat: (x1,p1,-p2,-x2) with dag2 (not a valid PT generator: it would
//          force xi1 = -xi2 against the positivity of xi1, xi2)
//   Tii:   (x1,-p1,-p2,x2) with dag3
//   PTi, PTii: parity composed with Ti resp. Tii.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/models.hpp"
#include "bcx/phase_space.hpp"
#include "bcx/scalar_field.hpp"

namespace bcx {

enum class SymmetryOpKind { Parity, Ti, Tihat, Tii, PTi, PTii };

[[nodiscard]] inline std::string op_name(SymmetryOpKind k) {
  switch (k) {
    case SymmetryOpKind::Parity: return "p";
    case SymmetryOpKind::Ti: return "ti";
    case SymmetryOpKind::Tihat: return "tihat";
    case SymmetryOpKind::Tii: return "tii";
    case SymmetryOpKind::PTi: return "pti";
    default: return "ptii";
  }
}

struct SymmetryOp {
  SymmetryOpKind kind;

  [[nodiscard]] PhasePoint map_point(const PhasePoint& q) const {
    switch (kind) {
      case SymmetryOpKind::Parity: return {-q.x1, -q.p1, -q.p2, -q.x2};
      case SymmetryOpKind::Ti:     return {q.x1, -q.p1, q.p2, -q.x2};
      case SymmetryOpKind::Tihat:  return {q.x1, q.p1, -q.p2, -q.x2};
      case SymmetryOpKind::Tii:    return {q.x1, -q.p1, -q.p2, q.x2};
      case SymmetryOpKind::PTi:    return {-q.x1, q.p1, -q.p2, q.x2};
      default:                     return {-q.x1, q.p1, q.p2, -q.x2};
    }
  }

  [[nodiscard]] std::optional<ConjKind> value_conj() const {
    switch (kind) {
      case SymmetryOpKind::Parity: return std::nullopt;
      case SymmetryOpKind::Ti:
      case SymmetryOpKind::PTi:    return ConjKind::Conj1;
      case SymmetryOpKind::Tihat:  return ConjKind::Conj2;
      default:                     return ConjKind::Conj3;
    }
  }

  [[nodiscard]] Bicomplex apply_value(const Bicomplex& w) const {
    const auto k = value_conj();
    return k ? conj(w, *k) : w;
  }
};

// (op psi)(pt) = conj(psi(op pt)).
[[nodiscard]] inline Bicomplex apply_op(const SymmetryOp& op, const ClosedFormState& st,
                                        const PhasePoint& pt) {
  return op.apply_value(psi_value(st, op.map_point(pt)));
}

// max over the grid of ||conj(V(op pt)) - V(pt)||.
[[nodiscard]] inline double check_potential_invariance(const SymmetryOp& op, const ModelSpec& spec,
                                                       const Grid& grid,
                                                       double exclusion_r2 = kExclusionR2) {
  double worst = 0.0;
  grid.for_each([&](const PhasePoint& pt) {
    std::array<double, 4> va{}, vb{};
    try {
      va = potential_components(spec, op.map_point(pt), exclusion_r2);
      vb = potential_components(spec, pt, exclusion_r2);
    } catch (const SingularPhasePoint&) {
      return;
    }
    const Bicomplex d = op.apply_value({va[0], va[1], va[2], va[3]}) - Bicomplex{vb[0], vb[1], vb[2], vb[3]};
    worst = std::max(worst, euclid_norm(d));
  });
  return worst;
}

enum class Verdict { Unbroken, Broken };

struct ClassificationReport {
  SymmetryOpKind op{};
  Verdict verdict = Verdict::Broken;
  Bicomplex lambda;        // meaningful when unbroken
  double max_deviation = 0.0;
  std::size_t points_used = 0;
  std::size_t points_skipped = 0;
  bool reliable = true;    // false when more than 5% of points were skipped
};

// Estimates lambda = (op psi)/psi pointwise over the grid; Unbroken when the
// collected lambdas agree to tau_sym * max(1, ||lambda||).
[[nodiscard]] inline ClassificationReport classify(const SymmetryOp& op,
                                                   const ClosedFormState& st, const Grid& grid,
                                                   double tau_sym = 1e-9) {
  if (op.kind != SymmetryOpKind::PTi && op.kind != SymmetryOpKind::PTii)
    throw std::invalid_argument("classify: operator must be pti or ptii");

  ClassificationReport rep;
  rep.op = op.kind;
  std::array<double, 4> lo{}, hi{};
  bool first = true;
  Bicomplex sum;
  grid.for_each([&](const PhasePoint& pt) {
    if (!st.admissible(pt) || !st.admissible(op.map_point(pt))) {
      ++rep.points_skipped;
      return;
    }
    const Bicomplex psi = psi_value(st, pt);
    if (euclid_norm(psi) < 1e-10 || is_singular(psi)) {
      ++rep.points_skipped;
      return;
    }
    const Bicomplex lam = apply_op(op, st, pt) / psi;
    const std::array<double, 4> c{lam.x1, lam.x2, lam.x3, lam.x4};
    for (int i = 0; i < 4; ++i) {
      lo[i] = first ? c[i] : std::min(lo[i], c[i]);
      hi[i] = first ? c[i] : std::max(hi[i], c[i]);
    }
    first = false;
    sum += lam;
    ++rep.points_used;
  });

  if (rep.points_used == 0) {
    rep.reliable = false;
    return rep;
  }
  double dev2 = 0.0;
  for (int i = 0; i < 4; ++i) dev2 += (hi[i] - lo[i]) * (hi[i] - lo[i]);
  rep.max_deviation = std::sqrt(dev2);
  rep.lambda = sum * (1.0 / static_cast<double>(rep.points_used));
  rep.verdict = rep.max_deviation <= tau_sym * std::max(1.0, euclid_norm(rep.lambda))
                    ? Verdict::Unbroken
                    : Verdict::Broken;
  const double skip_frac = static_cast<double>(rep.points_skipped) /
                           static_cast<double>(rep.points_used + rep.points_skipped);
  rep.reliable = skip_frac <= 0.05;
  return rep;
}

// Unbroken PTi forces E2 = E4 = 0; unbroken PTii forces E2 = E3 = 0.
[[nodiscard]] inline double unbroken_energy_constraint(SymmetryOpKind kind, const EnergyQuad& e) {
  if (kind == SymmetryOpKind::PTi) return std::abs(e.e2) + std::abs(e.e4);
  if (kind == SymmetryOpKind::PTii) return std::abs(e.e2) + std::abs(e.e3);
  throw std::invalid_argument("unbroken_energy_constraint: operator must be pti or ptii");
}

}  // namespace bcx
