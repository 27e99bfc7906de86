/**
 * @brief Exact sign decisions in the quadratic field Q(sqrt 5).
 *
 * Every comparison against the golden ratio phi = (1 + sqrt 5) / 2 in this
 * library goes through sign_q5, so no boundary test ever touches floating
 * point.
 */
#pragma once

#include "logcave/rational.hpp"

#include <compare>
#include <stdexcept>

namespace logcave::qfield {

/// p + q * sqrt(5).
struct Q5Number {
  Rational p;
  Rational q;
};

/// phi = 1/2 + 1/2 sqrt 5
inline Q5Number phi() { return {Rational(1, 2), Rational(1, 2)}; }
/// phi^2 = 3/2 + 1/2 sqrt 5
inline Q5Number phi_squared() { return {Rational(3, 2), Rational(1, 2)}; }

/// Sign of p + q sqrt 5, decided exactly.
inline int sign_q5(const Q5Number& v) {
  const int sp = sgn(v.p);
  const int sq = sgn(v.q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: |p| vs |q| sqrt 5, i.e. p^2 vs 5 q^2.
  const Rational p2 = v.p * v.p;
  const Rational q2 = 5 * v.q * v.q;
  const int c = cmp(p2, q2);
  return sp > 0 ? c : -c;
}

inline std::strong_ordering ordering_from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// r <=> phi. Equal cannot occur for rational r, but the branch stays so the
/// result is a total ordering like any other comparison.
inline std::strong_ordering cmp_phi(const Rational& r) {
  // r - phi = (2r - 1)/2 - sqrt5/2, same sign as (2r - 1) - sqrt 5
  return ordering_from_sign(sign_q5({2 * r - 1, Rational(-1)}));
}

/// lhs <=> phi^2 * rhs. Requires rhs >= 0.
inline std::strong_ordering cmp_phi_sq_scaled(const Rational& lhs, const Rational& rhs) {
  if (sgn(rhs) < 0) throw std::invalid_argument("cmp_phi_sq_scaled: rhs must be nonnegative");
  return ordering_from_sign(sign_q5({2 * lhs - 3 * rhs, Rational(-rhs)}));
}

/// lhs <=> phi * rhs, for any rational rhs.
inline std::strong_ordering cmp_phi_scaled(const Rational& lhs, const Rational& rhs) {
  return ordering_from_sign(sign_q5({2 * lhs - rhs, Rational(-rhs)}));
}

}  // namespace logcave::qfield
