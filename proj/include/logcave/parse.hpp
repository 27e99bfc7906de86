/**
 * @brief Text forms of sequences: "1,7,21,35,35,21,7,1", "1 8/5 1", or the
 *        half forms "--even 7,21,35" / "--odd 4,6".
 */
#pragma once

#include "logcave/seqops.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logcave {

/// Malformed sequence text; position is the 0-based offset of the problem.
class SequenceParseError : public std::invalid_argument {
 public:
  SequenceParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

/// Rationals separated by commas and/or whitespace. `offset` shifts
/// reported positions when parsing a suffix of a larger string.
inline std::vector<Rational> parse_rational_list(std::string_view text, std::size_t offset = 0) {
  std::vector<Rational> out;
  std::size_t i = 0;
  bool pending_comma = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == ',') {
      if (out.empty() || pending_comma) throw SequenceParseError("empty entry", offset + i);
      pending_comma = true;
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_separator(text[i])) ++i;
    try {
      out.push_back(parse_rational(text.substr(start, i - start)));
    } catch (const std::invalid_argument& e) {
      throw SequenceParseError(e.what(), offset + start);
    }
    pending_comma = false;
  }
  if (pending_comma) throw SequenceParseError("trailing comma", offset + text.size());
  if (out.empty()) throw SequenceParseError("empty sequence", offset);
  return out;
}

}  // namespace detail

/// Half form: x_0..x_n for the given parity.
inline SymmetricSeq parse_half(std::string_view text, Parity parity) {
  return {detail::parse_rational_list(text), parity};
}

/// Full sequence, or a half form prefixed with --even / --odd.
inline FiniteSequence parse_sequence(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  const std::string_view body = text.substr(lead);
  for (auto [flag, parity] : {std::pair{std::string_view("--even"), Parity::Even},
                              std::pair{std::string_view("--odd"), Parity::Odd}}) {
    if (body.starts_with(flag) &&
        (body.size() == flag.size() || std::isspace(static_cast<unsigned char>(body[flag.size()])) ||
         body[flag.size()] == '=')) {
      const std::size_t rest = lead + flag.size() + (body.size() > flag.size() ? 1 : 0);
      return SymmetricSeq{detail::parse_rational_list(text.substr(rest), rest), parity}.expand();
    }
  }
  return FiniteSequence(detail::parse_rational_list(text));
}

/// Comma-joined exact entries; parse_sequence(render(s)) == s.
inline std::string render(std::span<const Rational> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

inline std::string render(const FiniteSequence& s) { return render(s.values()); }

}  // namespace logcave
