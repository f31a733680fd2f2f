#pragma once

// Independent integer arithmetic for checking the digit-sequence code.

#include <cstdint>
#include <random>
#include <vector>

#include "sextab/sexnum.hpp"

namespace oracle {

using u64 = std::uint64_t;
constexpr u64 k60_4 = 60ull * 60 * 60 * 60;

// Base-60 digits of n > 0, most significant first, zeros kept.
inline std::vector<int> digits_of(u64 n) {
  std::vector<int> d;
  for (; n; n /= 60) d.insert(d.begin(), static_cast<int>(n % 60));
  return d;
}

inline u64 strip60(u64 n) {
  while (n % 60 == 0) n /= 60;
  return n;
}

// Canonical class of n > 0, built without the library's own conversion.
inline sextab::SexNumber sex(u64 n) {
  auto d = digits_of(strip60(n));
  return sextab::SexNumber::from_canonical(sextab::DigitSeq(d.begin(), d.end()));
}

inline u64 value_of(std::span<const sextab::Digit> d) {
  u64 v = 0;
  for (auto x : d) v = v * 60 + x;
  return v;
}

inline bool smooth(u64 n) {
  for (u64 p : {2ull, 3ull, 5ull})
    while (n % p == 0) n /= p;
  return n == 1;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eca6e51u);
  return g;
}

inline u64 uniform(u64 lo, u64 hi) {
  return std::uniform_int_distribution<u64>(lo, hi)(rng());
}

// A random regular number with exponents in [0, max_e].
inline sextab::SexNumber random_regular(long max_e) {
  return sextab::from_exponents({static_cast<long>(uniform(0, max_e)),
                                 static_cast<long>(uniform(0, max_e)),
                                 static_cast<long>(uniform(0, max_e))});
}

}  // namespace oracle
