#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sextab/sexnum.hpp"

namespace sextab {

enum class CorpusKind { Regulars, FourthPowers, Products, Powers };

struct CorpusSpec {
  CorpusKind kind = CorpusKind::Regulars;
  std::size_t max_digits = 0;  // Regulars: entry bound; others: base bound
  int factor_lo = 1;           // Products
  int factor_hi = 59;
  SexNumber power_base;        // Powers
  unsigned max_exp = 0;
  std::size_t budget = 2'000'000;  // cap on generated candidates

  static CorpusSpec regulars(std::size_t max_digits);
  static CorpusSpec fourth_powers(std::size_t base_max_digits);
  static CorpusSpec products(int lo, int hi, std::size_t base_max_digits);
  static CorpusSpec powers(const SexNumber& base, unsigned max_exp);

  // Header form, e.g. "regulars max_digits=30".
  std::string describe() const;
  bool operator==(const CorpusSpec&) const = default;
};

const char* kind_name(CorpusKind k);

struct Construction {
  enum class Kind { Product, Power };
  Kind kind = Kind::Product;
  std::uint32_t k = 0;  // factor or exponent
  SexNumber base;

  bool operator==(const Construction&) const = default;
  auto operator<=>(const Construction& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = k <=> o.k; c != 0) return c;
    return base <=> o.base;
  }
};

struct Provenance {
  std::optional<ExponentTriple> exponents;  // set when the entry is regular
  std::vector<Construction> constructions;   // every recorded derivation

  bool operator==(const Provenance&) const = default;
};

struct CorpusEntry {
  SexNumber value;
  Provenance provenance;

  bool operator==(const CorpusEntry&) const = default;
};

struct Corpus {
  CorpusSpec spec;
  std::vector<CorpusEntry> entries;  // sorted by (digit count, digits)

  std::size_t size() const { return entries.size(); }
};

enum class Exec { Serial, Parallel };

Corpus build_corpus(const CorpusSpec& spec, Exec exec = Exec::Parallel);
Corpus enumerate_regulars(std::size_t max_digits, Exec exec = Exec::Parallel);

constexpr std::size_t kMaxCorpusDigits = 40;
constexpr const char* kIndexVersion = "v1";

void save_index(const Corpus& c, std::ostream& out);
void save_index(const Corpus& c, const std::string& path);
// expected: kind the caller asks for; a header of another kind is rejected.
Corpus load_index(std::istream& in, std::optional<CorpusKind> expected = std::nullopt);
Corpus load_index(const std::string& path,
                  std::optional<CorpusKind> expected = std::nullopt);

namespace kernels {
// Parallel kernels walk the exponent lattice incrementally under OpenMP;
// serial references compute every entry from scratch.
std::vector<CorpusEntry> regulars_serial(std::size_t max_digits);
std::vector<CorpusEntry> regulars_parallel(std::size_t max_digits);
std::vector<CorpusEntry> fourth_powers_serial(const std::vector<CorpusEntry>& bases);
std::vector<CorpusEntry> fourth_powers_parallel(const std::vector<CorpusEntry>& bases);
std::vector<CorpusEntry> products_serial(const std::vector<CorpusEntry>& bases, int lo, int hi);
std::vector<CorpusEntry> products_parallel(const std::vector<CorpusEntry>& bases, int lo, int hi);
}  // namespace kernels

}  // namespace sextab
