#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sextab/error.hpp"

namespace sextab {

using Digit = std::uint8_t;
using DigitSeq = std::vector<Digit>;

constexpr int kBase = 60;

class SexDigit {
 public:
  explicit SexDigit(int v);
  int value() const noexcept { return v_; }

 private:
  Digit v_;
};

// Relative base-60 number: the class {n * 60^k} of a positive integer n,
// stored most significant digit first with no leading or trailing zeros.
class SexNumber {
 public:
  SexNumber() : d_{1} {}

  // Requires an already canonical sequence; throws otherwise.
  static SexNumber from_canonical(DigitSeq digits);
  static SexNumber from_integer(std::uint64_t n);

  const DigitSeq& digits() const noexcept { return d_; }
  std::size_t size() const noexcept { return d_.size(); }
  Digit operator[](std::size_t i) const { return d_[i]; }
  Digit back() const { return d_.back(); }
  bool is_one() const noexcept { return d_.size() == 1 && d_[0] == 1; }

  std::string str() const;

  bool operator==(const SexNumber&) const = default;
  // Corpus order: digit count first, then lexicographic.
  std::strong_ordering operator<=>(const SexNumber& o) const;

 private:
  explicit SexNumber(DigitSeq d) : d_(std::move(d)) {}
  friend SexNumber canonicalize(std::span<const int> raw);
  friend SexNumber canonicalize_digits(DigitSeq raw);

  DigitSeq d_;
};

SexNumber canonicalize(std::span<const int> raw);
SexNumber canonicalize_digits(DigitSeq raw);
// Plain dot-separated digits, e.g. "1.32.3.21"; every 0 is a digit.
SexNumber from_dotted(std::string_view text);

SexNumber mul(const SexNumber& a, const SexNumber& b);
SexNumber mul_digit(const SexNumber& a, int d);
DigitSeq add_aligned(std::span<const Digit> a, std::span<const Digit> b);
SexNumber pow(const SexNumber& a, unsigned k);
std::size_t digit_count(const SexNumber& a);

struct ExponentTriple {
  long p = 0;
  long q = 0;
  long r = 0;

  // Unique representative: p, q, r >= 0 and 2^p 3^q 5^r not divisible by 60.
  ExponentTriple canonical() const;
  ExponentTriple negated() const { return {-p, -q, -r}; }
  bool operator==(const ExponentTriple&) const = default;
};

SexNumber from_exponents(const ExponentTriple& t);
ExponentTriple to_exponents(const SexNumber& a);
bool is_regular(const SexNumber& a);
SexNumber reciprocal(const SexNumber& a);

// a with an absolute magnitude: the first digit carries 60^lead_exponent.
struct AbsoluteSex {
  SexNumber mantissa;
  long lead_exponent = 0;

  bool operator==(const AbsoluteSex&) const = default;
};

std::strong_ordering compare_absolute(const AbsoluteSex& a,
                                      const AbsoluteSex& b);
// Exact a * f for a positive integer f.
AbsoluteSex scale(const AbsoluteSex& a, std::uint32_t f);
// Exact a / f; f must be regular so the quotient terminates.
AbsoluteSex divide(const AbsoluteSex& a, std::uint32_t f);
// Semicolon notation, e.g. "34;30" or "0;6,40".
std::string to_string(const AbsoluteSex& a);

// Little-endian helpers on the integer of a digit sequence, shared with
// factorize.
namespace detail {
DigitSeq to_le(const SexNumber& a);
SexNumber from_le(DigitSeq le);
void mul_small_le(DigitSeq& le, std::uint32_t m);
// Divides in place; returns the remainder.
std::uint32_t div_small_le(DigitSeq& le, std::uint32_t m);
std::uint32_t mod_small(const SexNumber& a, std::uint32_t m);
}  // namespace detail

}  // namespace sextab
