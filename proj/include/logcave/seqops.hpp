/**
 * @brief Finite sequences, symmetric half-forms and the logconcavity
 *        operator L{c_i} = {c_i^2 - c_{i-1} c_{i+1}}.
 *
 * Indices outside a FiniteSequence read as zero, so the boundary entries of
 * L(s) are c_0^2 - 0 * c_1 = c_0^2 and likewise at the far end.
 */
#pragma once

#include "logcave/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace logcave {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Nonempty list of rationals with implicit zero padding.
class FiniteSequence {
 public:
  explicit FiniteSequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("FiniteSequence must be nonempty");
  }
  FiniteSequence(std::initializer_list<Rational> values)
      : FiniteSequence(std::vector<Rational>(values)) {}

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Rational> values() const { return values_; }

  /// Zero-padded access.
  Rational at_padded(std::ptrdiff_t i) const {
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(values_.size())) return Rational(0);
    return values_[static_cast<std::size_t>(i)];
  }

  std::size_t bit_size() const {
    std::size_t total = 0;
    for (const auto& v : values_) total += logcave::bit_size(v);
    return total;
  }

  FiniteSequence scaled(const Rational& factor) const {
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(v * factor);
    return FiniteSequence(std::move(out));
  }

  bool is_palindrome() const {
    for (std::size_t i = 0, j = values_.size() - 1; i < j; ++i, --j)
      if (values_[i] != values_[j]) return false;
    return true;
  }

  friend bool operator==(const FiniteSequence&, const FiniteSequence&) = default;

 private:
  std::vector<Rational> values_;
};

/// Half-form x_0..x_n of {1, x_0, ..., x_n, [x_n], ..., x_0, 1}.
struct SymmetricSeq {
  std::vector<Rational> half;
  Parity parity = Parity::Even;

  /// Index of the last half coordinate.
  std::size_t n() const { return half.size() - 1; }

  /// Even: length 2n+4, middle repeated. Odd: length 2n+3.
  FiniteSequence expand() const {
    if (half.empty()) throw std::invalid_argument("SymmetricSeq needs at least one coordinate");
    std::vector<Rational> out;
    out.reserve(2 * half.size() + 2);
    out.emplace_back(1);
    out.insert(out.end(), half.begin(), half.end());
    auto mirror_begin = parity == Parity::Even ? half.rbegin() : std::next(half.rbegin());
    out.insert(out.end(), mirror_begin, half.rend());
    out.emplace_back(1);
    return FiniteSequence(std::move(out));
  }

  friend bool operator==(const SymmetricSeq&, const SymmetricSeq&) = default;
};

namespace seqops {

/// L{c_i} = {c_i^2 - c_{i-1} c_{i+1}} with zero padding; length preserved.
inline FiniteSequence apply_L(const FiniteSequence& s) {
  std::vector<Rational> out;
  out.reserve(s.size());
  const auto len = static_cast<std::ptrdiff_t>(s.size());
  for (std::ptrdiff_t i = 0; i < len; ++i) {
    const Rational& c = s[static_cast<std::size_t>(i)];
    out.push_back(c * c - s.at_padded(i - 1) * s.at_padded(i + 1));
  }
  return FiniteSequence(std::move(out));
}

inline bool has_negative_entry(const FiniteSequence& s) {
  for (const auto& v : s.values())
    if (sgn(v) < 0) return true;
  return false;
}

/// Nonnegative entries and c_i^2 >= c_{i-1} c_{i+1} at every interior index.
inline bool is_logconcave(const FiniteSequence& s) {
  if (has_negative_entry(s)) return false;
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (s[i] * s[i] < s[i - 1] * s[i + 1]) return false;
  return true;
}

/// Positive entries and c_i^2 > c_{i-1} c_{i+1} at every index, padding
/// included (at the ends this reduces to c > 0).
inline bool is_strictly_logconcave(const FiniteSequence& s) {
  for (const auto& v : s.values())
    if (sgn(v) <= 0) return false;
  const auto len = static_cast<std::ptrdiff_t>(s.size());
  for (std::ptrdiff_t i = 0; i < len; ++i) {
    const Rational& c = s[static_cast<std::size_t>(i)];
    if (c * c <= s.at_padded(i - 1) * s.at_padded(i + 1)) return false;
  }
  return true;
}

struct Normalized {
  /// Empty when the rescaled sequence is not a palindrome ending in 1.
  std::optional<SymmetricSeq> symmetric;
  /// The first entry of the input; input = scale * {1, ...}.
  Rational scale;
};

/// Divides by the first entry and recognises the symmetric half-form.
/// Requires every entry positive and length >= 3.
inline Normalized normalize(const FiniteSequence& s) {
  if (s.size() < 3) throw std::invalid_argument("normalize: length must be at least 3");
  for (const auto& v : s.values())
    if (sgn(v) <= 0) throw std::invalid_argument("normalize: entries must be positive");

  Normalized result{std::nullopt, s[0]};
  if (!s.is_palindrome()) return result;

  const Rational inv = 1 / s[0];
  const std::size_t len = s.size();
  const std::size_t half_len = (len - 1) / 2;  // x_0 .. x_n, middle included
  SymmetricSeq sym;
  sym.parity = len % 2 == 0 ? Parity::Even : Parity::Odd;
  sym.half.reserve(half_len);
  for (std::size_t i = 1; i <= half_len; ++i) sym.half.push_back(s[i] * inv);
  result.symmetric = std::move(sym);
  return result;
}

}  // namespace seqops
}  // namespace logcave
