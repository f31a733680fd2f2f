#include "sextab/tablegen.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace sextab {

namespace {

std::string superscript(long n) {
  static const char* const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits = std::to_string(n);
  std::string out;
  for (char c : digits) out += c == '-' ? "⁻" : sup[c - '0'];
  return out;
}

const SexNumber& nine() {
  static const SexNumber n = SexNumber::from_integer(9);
  return n;
}

// Canonical regulars of at most max_digits digits.
std::vector<SexNumber> small_regulars(std::size_t max_digits) {
  std::vector<SexNumber> out;
  for (long p = 0; from_exponents({p, 0, 0}).size() <= max_digits; ++p)
    for (long q = 0; from_exponents({p, q, 0}).size() <= max_digits; ++q)
      for (long r = 0; from_exponents({p, q, r}).size() <= max_digits; ++r) {
        if (p >= 2 && q >= 1 && r >= 1) break;
        out.push_back(from_exponents({p, q, r}));
      }
  return out;
}

// Value strictly between 1 and 2 when read with the first digit as units.
bool in_one_two(const SexNumber& s) { return s[0] == 1 && s.size() > 1; }

bool value_less(const SexNumber& a, const SexNumber& b) {
  return compare_absolute({a, 0}, {b, 0}) < 0;
}

}  // namespace

std::string power_label(const std::vector<std::pair<int, long>>& factors) {
  std::string out;
  for (auto [base, e] : factors) {
    if (e == 0) continue;
    if (!out.empty()) out += "·";
    out += std::to_string(base);
    if (e != 1) out += superscript(e);
  }
  return out.empty() ? "1" : out;
}

std::vector<TableRow> text_a_table() {
  std::vector<TableRow> rows(47);
  SexNumber cur;
  for (long k = 0; k <= 46; ++k) {
    rows[static_cast<std::size_t>(46 - k)] = {{cur}, power_label({{9, k}})};
    cur = mul(cur, nine());
  }
  return rows;
}

std::vector<TableRow> text_b_table(bool include_n40, BTail tail) {
  std::vector<TableRow> rows;
  for (long n = include_n40 ? 40 : 39; n >= 0; --n)
    rows.push_back({{from_exponents({2 * n, 22 + n, 0})},
                    power_label({{9, 11}, {12, n}})});
  if (tail == BTail::PowersOfNine) {
    for (long k = 10; k >= 0; --k)
      rows.push_back({{from_exponents({0, 2 * k, 0})}, power_label({{9, k}})});
  } else {
    for (long k = 21; k >= 0; --k)
      rows.push_back({{from_exponents({0, k, 0})}, power_label({{3, k}})});
  }
  return rows;
}

std::map<int, SexNumber> standard_table_anchors(
    const std::vector<FixtureRecord>& fixture) {
  std::map<int, SexNumber> anchors;
  for (const auto& r : fixture) {
    if (r.kind != RecordKind::Reading || !r.has("nr")) continue;
    bool s_column = (r.text >= 'C' && r.text <= 'G' && r.column == "i") ||
                    (r.text == 'K' && r.column == "s");
    if (!s_column) continue;
    int nr = static_cast<int>(*r.attr_int("nr"));
    SexNumber s = from_dotted(r.digits);
    auto [it, fresh] = anchors.emplace(nr, s);
    if (!fresh && it->second != s)
      throw Error(Errc::FormatError,
                  "conflicting readings for Nr " + std::to_string(nr), r.source_line);
  }
  return anchors;
}

std::vector<TableRow> reconcile_standard_table(
    const std::map<int, SexNumber>& anchors, int size) {
  std::set<SexNumber> pool_set;
  for (const auto& n : small_regulars(5)) {
    if (in_one_two(n)) pool_set.insert(n);
    SexNumber rn = reciprocal(n);
    if (in_one_two(rn)) pool_set.insert(rn);
  }
  std::vector<SexNumber> pool(pool_set.begin(), pool_set.end());

  std::vector<std::optional<SexNumber>> slots(static_cast<std::size_t>(size) + 1);
  for (const auto& [k, s] : anchors)
    if (k >= 1 && k <= size) slots[static_cast<std::size_t>(k)] = s;

  int k = 1;
  while (k <= size) {
    if (slots[static_cast<std::size_t>(k)]) {
      ++k;
      continue;
    }
    int lo_idx = k - 1;
    int hi_idx = k;
    while (hi_idx <= size && !slots[static_cast<std::size_t>(hi_idx)]) ++hi_idx;
    std::size_t need = static_cast<std::size_t>(hi_idx - k);
    std::vector<SexNumber> cand;
    for (const auto& s : pool) {
      if (lo_idx >= 1 && !value_less(*slots[static_cast<std::size_t>(lo_idx)], s)) continue;
      if (hi_idx <= size && !value_less(s, *slots[static_cast<std::size_t>(hi_idx)])) continue;
      cand.push_back(s);
    }
    if (cand.size() < need)
      throw Error(Errc::Infeasible, "standard table gap before index " +
                                        std::to_string(hi_idx) + " cannot be filled");
    auto rank = [](const SexNumber& s) {
      std::size_t ls = s.size();
      std::size_t lr = reciprocal(s).size();
      return std::make_tuple(ls + lr, ls);
    };
    std::stable_sort(cand.begin(), cand.end(), [&](const SexNumber& a, const SexNumber& b) {
      auto ra = rank(a);
      auto rb = rank(b);
      if (ra != rb) return ra < rb;
      return value_less(a, b);
    });
    cand.resize(need);
    std::sort(cand.begin(), cand.end(), value_less);
    for (std::size_t i = 0; i < need; ++i) slots[static_cast<std::size_t>(k) + i] = cand[i];
    k = hi_idx;
  }

  std::vector<TableRow> rows;
  for (int i = 1; i <= size; ++i) {
    const SexNumber& s = *slots[static_cast<std::size_t>(i)];
    rows.push_back({{s, reciprocal(s)}, "Nr " + std::to_string(i)});
  }
  return rows;
}

std::vector<TableRow> standard_reciprocal_table() {
  static const std::vector<TableRow> table =
      reconcile_standard_table(standard_table_anchors(embedded_fixture()));
  return table;
}

std::vector<TableRow> ob_reciprocal_table() {
  std::vector<TableRow> rows;
  for (std::uint64_t n = 2; n <= 81; ++n) {
    std::uint64_t m = n;
    for (std::uint64_t p : {2u, 3u, 5u})
      while (m % p == 0) m /= p;
    if (m != 1) continue;
    SexNumber s = SexNumber::from_integer(n);
    rows.push_back({{s, reciprocal(s)}, "igi " + std::to_string(n)});
  }
  return rows;
}

std::vector<TableRow> squares_table(bool include_extras) {
  std::vector<TableRow> rows;
  for (const auto& row : standard_reciprocal_table()) {
    const SexNumber& s = row.cells[0];
    rows.push_back({{mul(s, s), s}, row.label});
    if (include_extras && row.label == "Nr 99") {
      SexNumber e = from_dotted("1.58.5.52.48");
      rows.push_back({{mul(e, e), e}, "extra " + e.str()});
    }
    if (include_extras && row.label == "Nr 100") {
      SexNumber e = from_dotted("2.1.4.8.3.0.27");
      rows.push_back({{mul(e, e), e}, "extra " + e.str()});
    }
  }
  return rows;
}

std::vector<TableRow> combined_mult_table(const SexNumber& principal) {
  std::vector<int> factors;
  for (int f = 1; f <= 20; ++f) factors.push_back(f);
  factors.insert(factors.end(), {30, 40, 50});
  std::vector<TableRow> rows;
  for (int f : factors)
    rows.push_back({{mul_digit(principal, f)}, std::to_string(f)});
  return rows;
}

const SexNumber& text_m_base() {
  static const SexNumber b = from_dotted("1.32.3.21.47.51.6.40");
  return b;
}

std::vector<TableRow> text_m_table(const SexNumber& base, long f_start,
                                   long f_step, long count) {
  if (count < 0) throw Error(Errc::RangeError, "negative row count", count);
  std::vector<TableRow> rows;
  for (long i = 0; i < count; ++i) {
    long f = f_start + i * f_step;
    if (f <= 0) throw Error(Errc::RangeError, "factor must be positive", f);
    SexNumber fs = SexNumber::from_integer(static_cast<std::uint64_t>(f));
    rows.push_back({{mul(base, fs)}, fs.str()});
  }
  return rows;
}

SquareTrace digitwise_square_trace(const SexNumber& a) {
  SquareTrace t{a, {}, a};
  const auto& d = a.digits();
  std::size_t n = d.size();
  DigitSeq sum{0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned prod = unsigned{d[i]} * d[j];
      std::size_t place = (n - 1 - i) + (n - 1 - j);
      DigitSeq aligned{static_cast<Digit>(prod / kBase), static_cast<Digit>(prod % kBase)};
      aligned.insert(aligned.end(), place, 0);
      sum = add_aligned(sum, aligned);
      t.partials.push_back({{i, j}, std::move(aligned)});
    }
  t.total = canonicalize_digits(std::move(sum));
  return t;
}

}  // namespace sextab
