#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sextab/corpus.hpp"
#include "sextab/pattern.hpp"

namespace sextab {

struct MatchResult {
  SexNumber candidate;
  Provenance provenance;
  std::size_t alignment_offset = 0;
  std::size_t entry_index = 0;  // position in the corpus

  bool operator==(const MatchResult&) const = default;
};

// Results in corpus order; the parallel scan returns the same sequence.
std::vector<MatchResult> match(const DigitPattern& p, const Corpus& c,
                               Exec exec = Exec::Parallel);
std::size_t count_matches(const DigitPattern& p, const Corpus& c,
                          Exec exec = Exec::Parallel);

// Throws Ambiguous (detail = count) or NoMatch on the first pattern that
// does not single out one entry.
std::vector<std::pair<DigitPattern, MatchResult>> unique_reconstruction(
    const std::vector<DigitPattern>& patterns, const Corpus& c);

// Non-negative rational num / den; an empty num is zero.
struct Fraction {
  std::optional<AbsoluteSex> num;
  std::uint32_t den = 1;
};

std::strong_ordering compare(const Fraction& a, const Fraction& b);
// The value as a terminating sexagesimal number, when it is one and nonzero.
std::optional<AbsoluteSex> exact_value(const Fraction& f);
// "34;30", "0" or "2;12/7".
std::string to_string(const Fraction& f);

// The product x * factor has its first digit at 60^lead and its leading
// digits read as the pattern's tokens up to the first floating gap.
struct PrincipalConstraint {
  int factor = 1;
  DigitPattern pattern;
  long lead = 0;
};

// Truncated reads the leading digits as the whole product, giving a closed
// interval; Continued lets unseen digits follow, so hi is exclusive.
enum class ReadingMode { Truncated, Continued };

struct PrincipalInference {
  Fraction lo;                 // inclusive
  std::optional<Fraction> hi;  // empty when no constraint bounds x above
  bool hi_inclusive = true;
  std::vector<AbsoluteSex> candidates;  // regular x inside [lo, hi], ascending
};

// Each constraint bounds x by its leading reading divided by the factor.
// Candidates come from the mantissas of `regulars`; every product must keep
// its declared lead and match its pattern from the first digit.
// Throws RangeError for factors outside 1..59, Infeasible for an empty
// intersection.
PrincipalInference infer_principal(const std::vector<PrincipalConstraint>& constraints,
                                   const Corpus* regulars = nullptr,
                                   ReadingMode mode = ReadingMode::Truncated);

}  // namespace sextab
