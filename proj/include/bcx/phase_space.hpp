#pragma once

// The extended phase space (x1, p1, p2, x2) carrying the components of the
// bicomplex coordinate x = x1 + i p1 + ih p2 + i*ih x2.

#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace bcx {

struct PhasePoint {
  double x1{0.0}, p1{0.0}, p2{0.0}, x2{0.0};

  [[nodiscard]] constexpr bool operator==(const PhasePoint& o) const = default;

  [[nodiscard]] double coord(int i) const {
    switch (i) {
      case 0: return x1;
      case 1: return p1;
      case 2: return p2;
      default: return x2;
    }
  }

  void set_coord(int i, double v) {
    switch (i) {
      case 0: x1 = v; break;
      case 1: p1 = v; break;
      case 2: p2 = v; break;
      default: x2 = v; break;
    }
  }

  [[nodiscard]] PhasePoint shifted(int i, double d) const {
    PhasePoint q = *this;
    q.set_coord(i, q.coord(i) + d);
    return q;
  }

  [[nodiscard]] bool all_finite() const {
    return std::isfinite(x1) && std::isfinite(p1) && std::isfinite(p2) && std::isfinite(x2);
  }
};

// Idempotent projections of the bicomplex coordinate:
//   w1 = (x1+x2) + i(p1-p2),  w2 = (x1-x2) + i(p1+p2).
[[nodiscard]] inline std::pair<std::complex<double>, std::complex<double>>
projected_coordinates(const PhasePoint& pt) {
  return {{pt.x1 + pt.x2, pt.p1 - pt.p2}, {pt.x1 - pt.x2, pt.p1 + pt.p2}};
}

}  // namespace bcx
