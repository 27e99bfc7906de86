/**
 * @brief Explicit members of the trapping region.
 *
 * Given a 1-logconcave symmetric base b_0..b_n, a contraction 0 < C < 1/phi
 * and a large enough amplitude a, the point
 *
 *     s_j = C^{T(j)} a^{j+1} b_j,      T(j) = j (j + 1)
 *
 * lies in R. Every ratio x_j^2 / (x_{j-1} x_{j+1}) of the base gets
 * multiplied by C^{-2} > phi^2, and the last ratio x_n / x_{n-1} by
 * a C^{T(n) - T(n-1)}, which the amplitude bound pushes past 2 (even) or
 * phi (odd).
 */
#pragma once

#include "logcave/qfield.hpp"
#include "logcave/region.hpp"
#include "logcave/seqops.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logcave::witness {

/// T(k) = 2 * (k-th triangular number) = k (k + 1), via T(k+1) = 2T(k) - T(k-1) + 2.
inline std::int64_t triangular_T(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("triangular_T: k must be nonnegative");
  std::int64_t prev = 0;  // T(0)
  if (k == 0) return prev;
  std::int64_t cur = 2;   // T(1)
  for (std::int64_t i = 1; i < k; ++i) {
    std::int64_t next = 2 * cur - prev + 2;
    prev = cur;
    cur = next;
  }
  if (cur != k * (k + 1)) throw std::logic_error("triangular_T: recurrence disagrees with k(k+1)");
  return cur;
}

struct WitnessParams {
  std::size_t n = 1;
  Parity parity = Parity::Even;
  Rational C;
  Rational a;
  SymmetricSeq base;
};

/// Binomial half-row: even -> C(2n+3, 1..n+1), odd -> C(2n+2, 1..n+1).
inline SymmetricSeq default_base(std::size_t n, Parity parity) {
  if (n < 1) throw std::invalid_argument("default_base: n must be at least 1");
  const unsigned long row = parity == Parity::Even ? 2 * n + 3 : 2 * n + 2;
  SymmetricSeq s{{}, parity};
  for (unsigned long k = 1; k <= n + 1; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), row, k);
    s.half.emplace_back(b);
  }
  return s;
}

inline Rational default_C() { return Rational(3, 5); }

/// C^{T(n-1) - T(n)} = C^{-2n}.
inline Rational amplitude_scale(std::size_t n, const Rational& C) {
  const auto e = triangular_T(static_cast<std::int64_t>(n) - 1) - triangular_T(static_cast<std::int64_t>(n));
  return pow(C, e);
}

/// 3 C^{T(n-1) - T(n)}: above the even bound (factor 2) and the odd bound
/// (factor phi) without comparing against anything irrational.
inline Rational default_a(std::size_t n, const Rational& C) { return 3 * amplitude_scale(n, C); }

inline WitnessParams default_params(std::size_t n, Parity parity) {
  Rational C = default_C();
  return {n, parity, C, default_a(n, C), default_base(n, parity)};
}

/// Empty string when valid, otherwise what is wrong.
inline std::string validate(const WitnessParams& p) {
  if (p.n < 1) return "n must be at least 1";
  if (sgn(p.C) <= 0) return "C must be positive";
  // C < 2/(1+sqrt5)  <=>  (C - 2) + C sqrt5 < 0
  if (qfield::sign_q5({p.C - 2, p.C}) >= 0) return "C must be below 2/(1+sqrt5)";

  const Rational scale = amplitude_scale(p.n, p.C);
  if (p.parity == Parity::Even) {
    if (p.a <= 2 * scale) return "a must exceed 2*C^(T(n-1)-T(n)) = " + to_string(Rational(2 * scale));
  } else if (qfield::cmp_phi_scaled(p.a, scale) != std::strong_ordering::greater) {
    return "a must exceed phi*C^(T(n-1)-T(n))";
  }

  if (p.base.half.size() != p.n + 1) return "base must have n+1 half values";
  if (p.base.parity != p.parity) return "base parity does not match";
  for (const auto& b : p.base.half)
    if (sgn(b) <= 0) return "base values must be positive";
  if (!seqops::is_logconcave(p.base.expand())) return "base is not 1-logconcave";
  return {};
}

/// s_j = C^{T(j)} a^{j+1} b_j. Throws std::invalid_argument on bad
/// parameters and std::logic_error if the result is somehow outside R.
inline SymmetricSeq build_witness(const WitnessParams& p) {
  if (auto err = validate(p); !err.empty()) throw std::invalid_argument("witness: " + err);

  SymmetricSeq s{{}, p.parity};
  s.half.reserve(p.n + 1);
  Rational a_power = p.a;
  for (std::size_t j = 0; j <= p.n; ++j) {
    s.half.push_back(pow(p.C, triangular_T(static_cast<std::int64_t>(j))) * a_power * p.base.half[j]);
    a_power *= p.a;
  }
  if (!region::in_region(region::RegionPoint::from(s)))
    throw std::logic_error("witness: constructed point is not in the region");
  return s;
}

}  // namespace logcave::witness
