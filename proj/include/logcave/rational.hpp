/**
 * @brief Exact rational numbers backed by GMP, plus the handful of helpers
 *        the rest of the library needs (parsing, rendering, powers, bit size).
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logcave {

/// Arbitrary-precision signed rational, always kept in canonical form
/// (positive denominator, reduced).
using Rational = mpq_class;

/// n / d in canonical form (mpq_class's two-argument constructor does not
/// reduce, and non-canonical values break comparisons).
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

/// Parses "7", "-3", "8/5" or "+1/2". Throws std::invalid_argument on a
/// malformed numeral or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!digits_ok(num) || !digits_ok(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? mpz_class(-n) : n, d);
  r.canonicalize();
  return r;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Always "num/den" (the JSON wire form).
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// r^e for any integer exponent, by repeated squaring on numerator and
/// denominator separately. Throws on 0 raised to a negative power.
inline Rational pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

/// Numerator bits plus denominator bits.
inline std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

}  // namespace logcave
