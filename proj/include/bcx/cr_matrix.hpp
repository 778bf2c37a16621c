#pragma once

// 4x4 real Cauchy-Riemann matrix representation of a bicomplex number.
// The map is an injective algebra homomorphism; the Frobenius norm of the
// image is exactly twice the Euclidean norm of the argument.

#include <array>
#include <cmath>

#include "bcx/bicomplex.hpp"

namespace bcx {

struct CRMatrix {
  std::array<std::array<double, 4>, 4> m{};

  [[nodiscard]] bool operator==(const CRMatrix& o) const { return m == o.m; }

  [[nodiscard]] CRMatrix operator+(const CRMatrix& o) const {
    CRMatrix r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }

  [[nodiscard]] CRMatrix operator-(const CRMatrix& o) const {
    CRMatrix r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
  }

  [[nodiscard]] CRMatrix operator*(const CRMatrix& o) const {
    CRMatrix r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }

  [[nodiscard]] double frobenius() const {
    double s = 0.0;
    for (const auto& row : m)
      for (double e : row) s += e * e;
    return std::sqrt(s);
  }

  static CRMatrix identity() {
    CRMatrix r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
  }
};

[[nodiscard]] inline CRMatrix to_matrix(const Bicomplex& a) {
  CRMatrix r;
  r.m = {{{a.x1, -a.x2, -a.x3, a.x4},
          {a.x2, a.x1, -a.x4, -a.x3},
          {a.x3, -a.x4, a.x1, -a.x2},
          {a.x4, a.x3, a.x2, a.x1}}};
  return r;
}

// A Cauchy-Riemann matrix is determined by its first column.
[[nodiscard]] inline Bicomplex from_matrix(const CRMatrix& n) {
  return {n.m[0][0], n.m[1][0], n.m[2][0], n.m[3][0]};
}

[[nodiscard]] inline CRMatrix cr_eps1() { return to_matrix(kE1); }
[[nodiscard]] inline CRMatrix cr_eps2() { return to_matrix(kE2); }

}  // namespace bcx
