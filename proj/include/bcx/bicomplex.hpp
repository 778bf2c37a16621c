#pragma once

// Bicomplex numbers: w = x1 + i x2 + ih x3 + i*ih x4 over the commutative
// ring with i^2 = ih^2 = -1 and (i*ih)^2 = +1.  The canonical storage is the
// four real coefficients; the complex-pair view (z1, z2) with z1 = x1 + i x2,
// z2 = x3 + i x4 and the idempotent view over e1 = (1+i*ih)/2, e2 = (1-i*ih)/2
// are derived.

#include <cmath>
#include <complex>
#include <cstdint>

#include "bcx/errors.hpp"

namespace bcx {

using cplx = std::complex<double>;

struct Bicomplex {
  double x1{0.0}, x2{0.0}, x3{0.0}, x4{0.0};

  constexpr Bicomplex() = default;
  constexpr Bicomplex(double a) : x1(a) {}
  constexpr Bicomplex(double a, double b, double c, double d) : x1(a), x2(b), x3(c), x4(d) {}

  static Bicomplex from_pair(cplx z1, cplx z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }

  [[nodiscard]] cplx z1() const { return {x1, x2}; }
  [[nodiscard]] cplx z2() const { return {x3, x4}; }

  [[nodiscard]] constexpr bool operator==(const Bicomplex& o) const = default;

  [[nodiscard]] constexpr Bicomplex operator-() const { return {-x1, -x2, -x3, -x4}; }

  [[nodiscard]] constexpr Bicomplex operator+(const Bicomplex& o) const {
    return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4};
  }
  [[nodiscard]] constexpr Bicomplex operator-(const Bicomplex& o) const {
    return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4};
  }
  [[nodiscard]] constexpr Bicomplex operator*(const Bicomplex& o) const {
    return {x1 * o.x1 - x2 * o.x2 - x3 * o.x3 + x4 * o.x4,
            x1 * o.x2 + x2 * o.x1 - x3 * o.x4 - x4 * o.x3,
            x3 * o.x1 - x4 * o.x2 + x1 * o.x3 - x2 * o.x4,
            x3 * o.x2 + x4 * o.x1 + x1 * o.x4 + x2 * o.x3};
  }
  [[nodiscard]] constexpr Bicomplex operator*(double s) const {
    return {s * x1, s * x2, s * x3, s * x4};
  }
  friend constexpr Bicomplex operator*(double s, const Bicomplex& a) { return a * s; }

  Bicomplex& operator+=(const Bicomplex& o) { return *this = *this + o; }
  Bicomplex& operator-=(const Bicomplex& o) { return *this = *this - o; }
  Bicomplex& operator*=(const Bicomplex& o) { return *this = *this * o; }
};

inline constexpr Bicomplex kOne{1, 0, 0, 0};
inline constexpr Bicomplex kI{0, 1, 0, 0};
inline constexpr Bicomplex kIhat{0, 0, 1, 0};
inline constexpr Bicomplex kIhyp{0, 0, 0, 1};  // i*ih, squares to +1
inline constexpr Bicomplex kE1{0.5, 0, 0, 0.5};
inline constexpr Bicomplex kE2{0.5, 0, 0, -0.5};

enum class ConjKind { Conj1 = 1, Conj2 = 2, Conj3 = 3 };

// dag1: (z1,z2) -> (conj z1, conj z2); dag2: (z1,-z2); dag3: (conj z1, -conj z2)
[[nodiscard]] constexpr Bicomplex conj(const Bicomplex& a, ConjKind k) {
  switch (k) {
    case ConjKind::Conj1: return {a.x1, -a.x2, a.x3, -a.x4};
    case ConjKind::Conj2: return {a.x1, a.x2, -a.x3, -a.x4};
    default:              return {a.x1, -a.x2, -a.x3, a.x4};
  }
}

[[nodiscard]] inline double euclid_norm(const Bicomplex& a) {
  return std::sqrt(a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3 + a.x4 * a.x4);
}

// The three moduli: |w|_1^2 = w*w^dag2, |w|_2^2 = w*w^dag1, |w|_3^2 = w*w^dag3.
[[nodiscard]] inline Bicomplex modulus_sq(const Bicomplex& a, ConjKind which) {
  switch (which) {
    case ConjKind::Conj1: return a * conj(a, ConjKind::Conj2);
    case ConjKind::Conj2: return a * conj(a, ConjKind::Conj1);
    default:              return a * conj(a, ConjKind::Conj3);
  }
}

struct IdempotentPair {
  cplx w1, w2;  // e1 and e2 projections
  [[nodiscard]] bool operator==(const IdempotentPair& o) const {
    return w1 == o.w1 && w2 == o.w2;
  }
};

[[nodiscard]] inline IdempotentPair split(const Bicomplex& a) {
  // z1 + ih z2 = (z1 - i z2) e1 + (z1 + i z2) e2
  return {{a.x1 + a.x4, a.x2 - a.x3}, {a.x1 - a.x4, a.x2 + a.x3}};
}

[[nodiscard]] inline Bicomplex join(const IdempotentPair& p) {
  return {0.5 * (p.w1.real() + p.w2.real()), 0.5 * (p.w1.imag() + p.w2.imag()),
          0.5 * (p.w2.imag() - p.w1.imag()), 0.5 * (p.w1.real() - p.w2.real())};
}

// Singularity: z1^2 + z2^2 = 0, equivalently a vanishing idempotent component.
// Relative tolerance sigma = sigma_rel * max(1, ||a||^2).
[[nodiscard]] inline bool is_singular(const Bicomplex& a, double sigma_rel = 1e-12) {
  const cplx m = a.z1() * a.z1() + a.z2() * a.z2();
  const double n = a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3 + a.x4 * a.x4;
  return std::abs(m) <= sigma_rel * std::max(1.0, n);
}

[[nodiscard]] inline Bicomplex inverse(const Bicomplex& a) {
  if (is_singular(a)) throw SingularOperand("inverse of a singular bicomplex");
  const cplx m = a.z1() * a.z1() + a.z2() * a.z2();  // |a|_1^2 as a complex number
  return Bicomplex::from_pair(a.z1() / m, -a.z2() / m);
}

[[nodiscard]] inline Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) {
  return a * inverse(b);
}

namespace detail {
template <typename F>
Bicomplex componentwise(const Bicomplex& a, F&& f) {
  const IdempotentPair p = split(a);
  return join({f(p.w1), f(p.w2)});
}
}  // namespace detail

// Elementary functions act componentwise in the idempotent basis:
// f(w) = f(w1) e1 + f(w2) e2.
[[nodiscard]] inline Bicomplex exp(const Bicomplex& a) {
  return detail::componentwise(a, [](cplx w) { return std::exp(w); });
}
[[nodiscard]] inline Bicomplex sin(const Bicomplex& a) {
  return detail::componentwise(a, [](cplx w) { return std::sin(w); });
}
[[nodiscard]] inline Bicomplex cos(const Bicomplex& a) {
  return detail::componentwise(a, [](cplx w) { return std::cos(w); });
}

// Principal branch per component; defined only for non-singular arguments.
[[nodiscard]] inline Bicomplex log(const Bicomplex& a) {
  if (is_singular(a)) throw SingularOperand("log of a singular bicomplex");
  return detail::componentwise(a, [](cplx w) { return std::log(w); });
}

[[nodiscard]] inline Bicomplex pow_n(const Bicomplex& a, unsigned n) {
  IdempotentPair p = split(a);
  cplx r1{1.0, 0.0}, r2{1.0, 0.0};
  cplx b1 = p.w1, b2 = p.w2;
  for (unsigned k = n; k != 0; k >>= 1) {
    if (k & 1u) { r1 *= b1; r2 *= b2; }
    b1 *= b1; b2 *= b2;
  }
  return join({r1, r2});
}

}  // namespace bcx
