#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sextab/sexnum.hpp"

namespace sextab {

struct PatternToken {
  enum class Kind { Exact, Any, Range, Units, Gap, FloatingGap };

  Kind kind = Kind::Any;
  int lo = 0;  // Exact digit, Range low, Units digit, Gap length
  int hi = 0;  // Range high
  bool uncertain = false;  // Exact digit read from a damaged sign

  static PatternToken exact(int d, bool uncertain = false);
  static PatternToken any() { return {}; }
  static PatternToken range(int lo, int hi);
  static PatternToken units(int u);
  static PatternToken gap(int k);
  static PatternToken floating() { return {Kind::FloatingGap, 0, 0, false}; }

  // Number of digit positions covered (FloatingGap covers a variable run).
  std::size_t width() const { return kind == Kind::Gap ? static_cast<std::size_t>(lo) : 1; }
  bool accepts(Digit d) const;
  int min_digit() const;
  int max_digit() const;

  bool operator==(const PatternToken&) const = default;
};

enum class Alignment { Floating, AnchoredLeft, AnchoredRight, Full };

struct DigitPattern {
  std::vector<PatternToken> tokens;
  Alignment alignment = Alignment::Floating;
  std::optional<std::size_t> max_total_digits;

  std::size_t fixed_width() const;
  bool has_floating_gap() const;

  bool operator==(const DigitPattern&) const = default;
};

// Grammar: [^] token (. token)* [$] [--max N]
//   token := N | N~ | ? | ?[lo-hi] | ?u | *{k} | *
// N~ marks a damaged digit read as N; ?u is a digit whose units are u and
// whose tens are lost.
DigitPattern parse_pattern(std::string_view source);
std::string format_pattern(const DigitPattern& p);

// Replaces each uncertain exact digit by the range of its tens decade.
DigitPattern widen_uncertain(const DigitPattern& p);

// Smallest offset at which the pattern's first concrete token sits in a
// match of digits, or nullopt.
std::optional<std::size_t> match_offset(const DigitPattern& p,
                                        std::span<const Digit> digits);

inline std::optional<std::size_t> match_offset(const DigitPattern& p,
                                               const SexNumber& n) {
  return match_offset(p, std::span<const Digit>(n.digits()));
}

}  // namespace sextab
