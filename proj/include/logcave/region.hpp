/**
 * @brief Membership in the trapping region R and side-of-surface tests.
 *
 * For a half-vector (x_0, ..., x_n) the boundary surfaces are
 *
 *   H_0        : x_0 = phi * sqrt(x_1)
 *   H_j, 0<j<n : x_j = phi * sqrt(x_{j-1} x_{j+1})
 *   H_n        : x_n = 2 x_{n-1}          (even)
 *                x_n = phi * x_{n-1}      (odd)
 *
 * and R is the open set of positive increasing points lying strictly above
 * every H_j in coordinate j. All square roots are eliminated by squaring
 * both (positive) sides, so each test is a sign decision in Q(sqrt 5).
 */
#pragma once

#include "logcave/qfield.hpp"
#include "logcave/seqops.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace logcave::region {

struct RegionPoint {
  std::vector<Rational> coords;
  Parity parity = Parity::Even;

  std::size_t n() const { return coords.size() - 1; }

  static RegionPoint from(const SymmetricSeq& s) { return {s.half, s.parity}; }
  SymmetricSeq as_sequence() const { return {coords, parity}; }
};

enum class Side { Below, On, Above };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::Below: return "Below";
    case Side::On: return "On";
    case Side::Above: return "Above";
  }
  return "?";
}

namespace detail {

inline Side side_from(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return Side::Below;
  if (o == std::strong_ordering::greater) return Side::Above;
  return Side::On;
}

inline void require_positive(const RegionPoint& p) {
  if (p.coords.empty()) throw std::invalid_argument("region point needs at least one coordinate");
  for (const auto& c : p.coords)
    if (sgn(c) <= 0) throw std::invalid_argument("region coordinates must be positive");
}

}  // namespace detail

/// Which side of H_j the point lies on, judged in coordinate j.
inline Side side_of(const RegionPoint& p, std::size_t j) {
  detail::require_positive(p);
  const std::size_t n = p.n();
  if (n == 0) throw std::invalid_argument("side_of: n = 0 has no boundary surfaces");
  if (j > n) throw std::out_of_range("side_of: surface index out of range");
  const auto& x = p.coords;

  if (j == 0) return detail::side_from(qfield::cmp_phi_sq_scaled(x[0] * x[0], x[1]));
  if (j < n) return detail::side_from(qfield::cmp_phi_sq_scaled(x[j] * x[j], x[j - 1] * x[j + 1]));
  if (p.parity == Parity::Even) return detail::side_from(cmp(x[n], Rational(2 * x[n - 1])) <=> 0);
  return detail::side_from(qfield::cmp_phi_scaled(x[n], x[n - 1]));
}

/// Full breakdown of a membership decision.
struct Membership {
  bool in_region = false;
  std::vector<Side> per_surface;            // empty for n = 0
  std::vector<std::string> failed_conditions;
};

inline Membership check_membership(const RegionPoint& p) {
  detail::require_positive(p);
  Membership m;
  const auto& x = p.coords;
  const std::size_t n = p.n();

  if (n == 0) {
    // The one-coordinate cases are closed: {1,x,1} needs x >= phi,
    // {1,x,x,1} needs x >= 2.
    bool ok = p.parity == Parity::Odd ? qfield::cmp_phi(x[0]) != std::strong_ordering::less
                                      : x[0] >= 2;
    if (!ok) m.failed_conditions.emplace_back(p.parity == Parity::Odd ? "x0>=phi" : "x0>=2");
    m.in_region = ok;
    return m;
  }

  if (x[0] <= 1) m.failed_conditions.emplace_back("x0>1");
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] >= x[i + 1]) {
      m.failed_conditions.emplace_back("increasing");
      break;
    }
  }
  if (!seqops::is_strictly_logconcave(p.as_sequence().expand()))
    m.failed_conditions.emplace_back("strictly-logconcave");

  m.per_surface.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    Side s = side_of(p, j);
    m.per_surface.push_back(s);
    if (s != Side::Above) m.failed_conditions.push_back("H" + std::to_string(j));
  }
  m.in_region = m.failed_conditions.empty();
  return m;
}

inline bool in_region(const RegionPoint& p) { return check_membership(p).in_region; }

}  // namespace logcave::region
