#pragma once

// Real scalar fields over the extended phase space with optional analytic
// partials, order-2 central finite differences, the differential operator F
// with weights (-7/2, 3/2, 1/2, -5/2), and the Cauchy-Riemann quadruple check.

#include <array>
#include <cstddef>
#include <functional>
#include <utility>

#include "bcx/errors.hpp"
#include "bcx/phase_space.hpp"

namespace bcx {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

struct ScalarField {
  std::function<double(const PhasePoint&)> value;
  std::function<Vec4(const PhasePoint&)> gradient;  // null when analytic partials absent
  std::function<Mat4(const PhasePoint&)> hessian;

  [[nodiscard]] bool has_partials() const {
    return static_cast<bool>(gradient) && static_cast<bool>(hessian);
  }
};

struct FDScheme {
  double h = 1e-3;
};

enum class EvalMode { Analytic, FiniteDifference };

// First partial d f / d c_i, order-2 central stencil.
[[nodiscard]] inline double fd_partial(const ScalarField& f, const PhasePoint& pt, int i,
                                       const FDScheme& s = {}) {
  return (f.value(pt.shifted(i, s.h)) - f.value(pt.shifted(i, -s.h))) / (2.0 * s.h);
}

// Second partial d^2 f / d c_i d c_j; 3-point stencil on the diagonal,
// 4-point cross stencil for mixed partials.
[[nodiscard]] inline double fd_partial(const ScalarField& f, const PhasePoint& pt, int i, int j,
                                       const FDScheme& s = {}) {
  if (i == j) {
    return (f.value(pt.shifted(i, s.h)) - 2.0 * f.value(pt) + f.value(pt.shifted(i, -s.h))) /
           (s.h * s.h);
  }
  const double pp = f.value(pt.shifted(i, s.h).shifted(j, s.h));
  const double pm = f.value(pt.shifted(i, s.h).shifted(j, -s.h));
  const double mp = f.value(pt.shifted(i, -s.h).shifted(j, s.h));
  const double mm = f.value(pt.shifted(i, -s.h).shifted(j, -s.h));
  return (pp - pm - mp + mm) / (4.0 * s.h * s.h);
}

inline constexpr Vec4 kFWeights{-3.5, 1.5, 0.5, -2.5};

// F f = -(7/2) f_x1x1 + (3/2) f_p1p1 + (1/2) f_p2p2 - (5/2) f_x2x2
[[nodiscard]] inline double apply_F(const ScalarField& f, const PhasePoint& pt, EvalMode mode,
                                    const FDScheme& s = {}) {
  if (mode == EvalMode::Analytic) {
    if (!f.has_partials()) throw MissingAnalyticPartials("apply_F: field has no analytic partials");
    const Mat4 h = f.hessian(pt);
    return kFWeights[0] * h[0][0] + kFWeights[1] * h[1][1] + kFWeights[2] * h[2][2] +
           kFWeights[3] * h[3][3];
  }
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r += kFWeights[i] * fd_partial(f, pt, i, i, s);
  return r;
}

// The 12 independent residuals of the four Cauchy-Riemann condition rows
//   d1 psi1 = d2 psi2 = d3 psi3 = d4 psi4
//   d1 psi2 = -d2 psi1 = d3 psi4 = -d4 psi3
//   d1 psi3 = d2 psi4 = -d3 psi1 = -d4 psi2
//   d1 psi4 = -d2 psi3 = -d3 psi2 = d4 psi1
// where d1..d4 differentiate along (x1, p1, p2, x2).
[[nodiscard]] inline std::array<double, 12> check_cr_quadruple(
    const std::array<ScalarField, 4>& psi, const PhasePoint& pt, const FDScheme& s = {},
    EvalMode mode = EvalMode::FiniteDifference) {
  Mat4 d{};  // d[j][c] = partial of psi_j along coordinate c
  for (int j = 0; j < 4; ++j) {
    if (mode == EvalMode::Analytic) {
      if (!psi[j].has_partials())
        throw MissingAnalyticPartials("check_cr_quadruple: missing analytic gradient");
      d[j] = psi[j].gradient(pt);
    } else {
      for (int c = 0; c < 4; ++c) d[j][c] = fd_partial(psi[j], pt, c, s);
    }
  }
  return {d[1][1] - d[0][0], d[2][2] - d[0][0], d[3][3] - d[0][0],
          -d[0][1] - d[1][0], d[3][2] - d[1][0], -d[2][3] - d[1][0],
          d[3][1] - d[2][0], -d[0][2] - d[2][0], -d[1][3] - d[2][0],
          -d[2][1] - d[3][0], -d[1][2] - d[3][0], d[0][3] - d[3][0]};
}

struct Grid {
  std::array<double, 4> lo{-1.5, -1.5, -1.5, -1.5};
  std::array<double, 4> hi{1.5, 1.5, 1.5, 1.5};
  std::array<int, 4> count{7, 7, 7, 7};
  std::function<bool(const PhasePoint&)> excluded;  // optional

  static Grid symmetric(double range, int n) {
    Grid g;
    g.lo = {-range, -range, -range, -range};
    g.hi = {range, range, range, range};
    g.count = {n, n, n, n};
    return g;
  }

  [[nodiscard]] std::size_t total() const {
    return static_cast<std::size_t>(count[0]) * count[1] * count[2] * count[3];
  }

  [[nodiscard]] double node(int axis, int k) const {
    if (count[axis] == 1) return 0.5 * (lo[axis] + hi[axis]);
    return lo[axis] + (hi[axis] - lo[axis]) * k / (count[axis] - 1);
  }

  // Visits every non-excluded point; returns the number visited.
  template <typename F>
  std::size_t for_each(F&& f) const {
    std::size_t visited = 0;
    for (int a = 0; a < count[0]; ++a)
      for (int b = 0; b < count[1]; ++b)
        for (int c = 0; c < count[2]; ++c)
          for (int d = 0; d < count[3]; ++d) {
            const PhasePoint pt{node(0, a), node(1, b), node(2, c), node(3, d)};
            if (excluded && excluded(pt)) continue;
            ++visited;
            f(pt);
          }
    return visited;
  }

  [[nodiscard]] std::size_t admissible_count() const {
    return for_each([](const PhasePoint&) {});
  }
};

// ---- field combinators ----

[[nodiscard]] inline ScalarField constant_field(double c) {
  return {[c](const PhasePoint&) { return c; },
          [](const PhasePoint&) { return Vec4{}; },
          [](const PhasePoint&) { return Mat4{}; }};
}

[[nodiscard]] inline ScalarField scale(double c, const ScalarField& f) {
  ScalarField r;
  r.value = [c, v = f.value](const PhasePoint& pt) { return c * v(pt); };
  if (f.has_partials()) {
    r.gradient = [c, g = f.gradient](const PhasePoint& pt) {
      Vec4 out = g(pt);
      for (double& e : out) e *= c;
      return out;
    };
    r.hessian = [c, h = f.hessian](const PhasePoint& pt) {
      Mat4 out = h(pt);
      for (auto& row : out)
        for (double& e : row) e *= c;
      return out;
    };
  }
  return r;
}

[[nodiscard]] inline ScalarField add(const ScalarField& f, const ScalarField& g) {
  ScalarField r;
  r.value = [a = f.value, b = g.value](const PhasePoint& pt) { return a(pt) + b(pt); };
  if (f.has_partials() && g.has_partials()) {
    r.gradient = [a = f.gradient, b = g.gradient](const PhasePoint& pt) {
      Vec4 x = a(pt), y = b(pt);
      for (int i = 0; i < 4; ++i) x[i] += y[i];
      return x;
    };
    r.hessian = [a = f.hessian, b = g.hessian](const PhasePoint& pt) {
      Mat4 x = a(pt), y = b(pt);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) x[i][j] += y[i][j];
      return x;
    };
  }
  return r;
}

// e^r cos(phi) and e^r sin(phi) with partials from the chain rule; used for
// the wavefunction component combinations e^{g_r} cos g_i, e^{g_r} sin g_i.
[[nodiscard]] inline ScalarField exp_cos(const ScalarField& r, const ScalarField& phi) {
  ScalarField out;
  out.value = [rv = r.value, pv = phi.value](const PhasePoint& pt) {
    return std::exp(rv(pt)) * std::cos(pv(pt));
  };
  if (r.has_partials() && phi.has_partials()) {
    out.gradient = [r, phi](const PhasePoint& pt) {
      const double e = std::exp(r.value(pt)), c = std::cos(phi.value(pt)),
                   s = std::sin(phi.value(pt));
      const Vec4 dr = r.gradient(pt), dp = phi.gradient(pt);
      Vec4 g;
      for (int i = 0; i < 4; ++i) g[i] = e * (dr[i] * c - dp[i] * s);
      return g;
    };
    out.hessian = [r, phi](const PhasePoint& pt) {
      const double e = std::exp(r.value(pt)), c = std::cos(phi.value(pt)),
                   s = std::sin(phi.value(pt));
      const Vec4 dr = r.gradient(pt), dp = phi.gradient(pt);
      const Mat4 hr = r.hessian(pt), hp = phi.hessian(pt);
      Mat4 h;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          h[i][j] = e * ((hr[i][j] + dr[i] * dr[j] - dp[i] * dp[j]) * c -
                         (hp[i][j] + dr[i] * dp[j] + dr[j] * dp[i]) * s);
      return h;
    };
  }
  return out;
}

[[nodiscard]] inline ScalarField exp_sin(const ScalarField& r, const ScalarField& phi) {
  ScalarField out;
  out.value = [rv = r.value, pv = phi.value](const PhasePoint& pt) {
    return std::exp(rv(pt)) * std::sin(pv(pt));
  };
  if (r.has_partials() && phi.has_partials()) {
    out.gradient = [r, phi](const PhasePoint& pt) {
      const double e = std::exp(r.value(pt)), c = std::cos(phi.value(pt)),
                   s = std::sin(phi.value(pt));
      const Vec4 dr = r.gradient(pt), dp = phi.gradient(pt);
      Vec4 g;
      for (int i = 0; i < 4; ++i) g[i] = e * (dr[i] * s + dp[i] * c);
      return g;
    };
    out.hessian = [r, phi](const PhasePoint& pt) {
      const double e = std::exp(r.value(pt)), c = std::cos(phi.value(pt)),
                   s = std::sin(phi.value(pt));
      const Vec4 dr = r.gradient(pt), dp = phi.gradient(pt);
      const Mat4 hr = r.hessian(pt), hp = phi.hessian(pt);
      Mat4 h;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          h[i][j] = e * ((hr[i][j] + dr[i] * dr[j] - dp[i] * dp[j]) * s +
                         (hp[i][j] + dr[i] * dp[j] + dr[j] * dp[i]) * c);
      return h;
    };
  }
  return out;
}

}  // namespace bcx
