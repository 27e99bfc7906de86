// Test-only generators shared by the unit and acceptance suites.
#pragma once

#include "logcave/region.hpp"
#include "logcave/seqops.hpp"

#include <optional>
#include <random>

namespace logcave::testing {

/// Small positive rational k / 10^m; small m hugs the boundary less.
inline Rational random_margin(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> k(1, 999);
  std::uniform_int_distribution<int> m(0, 6);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(m(rng)));
  Rational r(mpz_class(k(rng)), den);
  r.canonicalize();
  return r;
}

/// Random point of the region. Built from consecutive ratios
/// q_j = x_{j+1} / x_j: the last one just above 2 (even) or phi (odd), each
/// earlier one a factor just above phi^2 larger, then confirmed exactly.
inline region::RegionPoint random_region_point(std::mt19937_64& rng, std::size_t n, Parity parity) {
  const Rational phi_sq_floor = frac(2618034, 1000000);   // above phi^2 = 2.6180339...
  const Rational phi_floor = frac(1618034, 1000000);      // above phi
  for (;;) {
    if (n == 0) {
      Rational x = (parity == Parity::Even ? Rational(2) : phi_floor) + random_margin(rng) - logcave::frac(1, 1000000);
      region::RegionPoint p{{x}, parity};
      if (region::in_region(p)) return p;
      continue;
    }
    std::vector<Rational> q(n);
    q[n - 1] = (parity == Parity::Even ? Rational(2) : phi_floor) + random_margin(rng) / 100;
    for (std::size_t j = n - 1; j-- > 0;) q[j] = q[j + 1] * (phi_sq_floor + random_margin(rng) / 100);
    std::vector<Rational> x(n + 1);
    x[0] = q[0] * (phi_sq_floor + random_margin(rng) / 100);
    for (std::size_t j = 0; j < n; ++j) x[j + 1] = x[j] * q[j];
    region::RegionPoint p{std::move(x), parity};
    if (region::in_region(p)) return p;
  }
}

/// One application of L followed by renormalization to a leading 1.
inline std::optional<region::RegionPoint> step_and_renormalize(const region::RegionPoint& p) {
  auto next = seqops::apply_L(p.as_sequence().expand());
  for (const auto& v : next.values())
    if (sgn(v) <= 0) return std::nullopt;
  auto norm = seqops::normalize(next);
  if (!norm.symmetric) return std::nullopt;
  return region::RegionPoint::from(*norm.symmetric);
}

}  // namespace logcave::testing
