/**
 * @brief Iterate L until an iterate stops being logconcave (refuted) or lands
 *        in the trapping region (certified), or the iteration/bit budget runs
 *        out.
 *
 * An iterate L^k(s) that is nonnegative but not logconcave has a negative
 * entry in L^{k+1}(s), so refutation is reported at the first non-logconcave
 * iterate together with the iterate that actually goes negative.
 */
#pragma once

#include "logcave/region.hpp"
#include "logcave/seqops.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace logcave {

enum class Verdict { CertifiedInfLogconcave, NotLogconcave, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedInfLogconcave: return "certified";
    case Verdict::NotLogconcave: return "refuted";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  /// Capture iterate, first non-logconcave iterate, or where we gave up.
  std::uint32_t iterate = 0;
  /// NotLogconcave only: first iterate with a negative entry (iterate or
  /// iterate + 1).
  std::uint32_t negative_iterate = 0;
  /// "max-iterations" or "bit-budget" for Unknown, empty otherwise.
  std::string reason;
  /// Normalized half-form of the capturing iterate (Certified only).
  std::optional<SymmetricSeq> captured;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline constexpr std::uint32_t kDefaultMaxIter = 30;
inline constexpr std::size_t kDefaultBitBudget = 1'000'000;

struct ClassifyOptions {
  std::uint32_t max_iter = kDefaultMaxIter;
  std::size_t bit_budget = kDefaultBitBudget;
};

namespace seqops {

namespace detail {

/// L(lambda s) = lambda^2 L(s), so dividing each iterate by its (positive)
/// first entry changes no sign and keeps the iteration independent of scale.
inline FiniteSequence rescale_leading(const FiniteSequence& s) {
  if (sgn(s[0]) > 0 && s[0] != 1) return s.scaled(1 / s[0]);
  return s;
}

inline bool all_positive(const FiniteSequence& s) {
  for (const auto& v : s.values())
    if (sgn(v) <= 0) return false;
  return true;
}

}  // namespace detail

/// Region capture test for one iterate. Zero entries and non-symmetric
/// iterates are never captured.
inline std::optional<SymmetricSeq> region_capture(const FiniteSequence& s) {
  if (s.size() < 3 || !detail::all_positive(s)) return std::nullopt;
  auto norm = normalize(s);
  if (!norm.symmetric) return std::nullopt;
  if (!region::in_region(region::RegionPoint::from(*norm.symmetric))) return std::nullopt;
  return norm.symmetric;
}

inline Certificate classify(const FiniteSequence& input, ClassifyOptions opts = {}) {
  FiniteSequence current = detail::rescale_leading(input);
  for (std::uint32_t k = 0;; ++k) {
    if (!is_logconcave(current))
      return {Verdict::NotLogconcave, k, has_negative_entry(current) ? k : k + 1, {}, std::nullopt};
    if (auto captured = region_capture(current))
      return {Verdict::CertifiedInfLogconcave, k, 0, {}, std::move(captured)};
    if (current.bit_size() > opts.bit_budget) return {Verdict::Unknown, k, 0, "bit-budget", std::nullopt};
    if (k >= opts.max_iter) return {Verdict::Unknown, k, 0, "max-iterations", std::nullopt};
    current = detail::rescale_leading(apply_L(current));
  }
}

}  // namespace seqops
}  // namespace logcave
