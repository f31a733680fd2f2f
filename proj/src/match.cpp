#include "sextab/match.hpp"

#include <algorithm>

namespace sextab {

namespace {

std::optional<MatchResult> try_entry(const DigitPattern& p, const Corpus& c, std::size_t i) {
  const auto& e = c.entries[i];
  auto off = match_offset(p, e.value);
  if (!off) return std::nullopt;
  return MatchResult{e.value, e.provenance, *off, i};
}

}  // namespace

std::vector<MatchResult> match(const DigitPattern& p, const Corpus& c, Exec exec) {
  std::vector<MatchResult> out;
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < c.entries.size(); ++i)
      if (auto r = try_entry(p, c, i)) out.push_back(std::move(*r));
    return out;
  }
  const long n = static_cast<long>(c.entries.size());
#pragma omp parallel
  {
    std::vector<MatchResult> local;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i)
      if (auto r = try_entry(p, c, static_cast<std::size_t>(i))) local.push_back(std::move(*r));
#pragma omp critical
    std::move(local.begin(), local.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end(), [](const MatchResult& a, const MatchResult& b) {
    return a.entry_index < b.entry_index;
  });
  return out;
}

std::size_t count_matches(const DigitPattern& p, const Corpus& c, Exec exec) {
  const long n = static_cast<long>(c.entries.size());
  long count = 0;
  if (exec == Exec::Serial) {
    for (const auto& e : c.entries) count += match_offset(p, e.value).has_value();
    return static_cast<std::size_t>(count);
  }
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (long i = 0; i < n; ++i)
    count += match_offset(p, c.entries[static_cast<std::size_t>(i)].value).has_value();
  return static_cast<std::size_t>(count);
}

std::vector<std::pair<DigitPattern, MatchResult>> unique_reconstruction(
    const std::vector<DigitPattern>& patterns, const Corpus& c) {
  std::vector<std::pair<DigitPattern, MatchResult>> out;
  for (const auto& p : patterns) {
    auto m = match(p, c);
    if (m.empty()) throw Error(Errc::NoMatch, "no entry matches " + format_pattern(p));
    if (m.size() > 1)
      throw Error(Errc::Ambiguous,
                  std::to_string(m.size()) + " entries match " + format_pattern(p),
                  static_cast<long>(m.size()));
    out.emplace_back(p, std::move(m.front()));
  }
  return out;
}

std::strong_ordering compare(const Fraction& a, const Fraction& b) {
  if (!a.num || !b.num) return a.num.has_value() <=> b.num.has_value();
  return compare_absolute(scale(*a.num, b.den), scale(*b.num, a.den));
}

std::optional<AbsoluteSex> exact_value(const Fraction& f) {
  if (!f.num) return std::nullopt;
  std::uint32_t rough = f.den;
  for (std::uint32_t p : {2u, 3u, 5u})
    while (rough % p == 0) rough /= p;
  AbsoluteSex v = *f.num;
  if (rough != 1) {
    // The mantissa's integer must absorb the part of den coprime to 60.
    if (detail::mod_small(v.mantissa, rough) != 0) return std::nullopt;
    DigitSeq le = detail::to_le(v.mantissa);
    std::size_t before = le.size();
    detail::div_small_le(le, rough);
    while (le.size() > 1 && le.back() == 0) le.pop_back();
    long lead = v.lead_exponent - static_cast<long>(before - le.size());
    v = {detail::from_le(std::move(le)), lead};
  }
  return divide(v, f.den / rough);
}

std::string to_string(const Fraction& f) {
  if (!f.num) return "0";
  if (auto v = exact_value(f)) return to_string(*v);
  return to_string(*f.num) + "/" + std::to_string(f.den);
}

namespace {

// Digits at 60^lead, 60^(lead-1), ...; empty when all are zero.
std::optional<AbsoluteSex> reading(const std::vector<int>& digits, long lead) {
  std::size_t first = 0;
  while (first < digits.size() && digits[first] == 0) ++first;
  if (first == digits.size()) return std::nullopt;
  std::size_t last = digits.size();
  while (digits[last - 1] == 0) --last;
  DigitSeq d(digits.begin() + static_cast<long>(first), digits.begin() + static_cast<long>(last));
  return AbsoluteSex{SexNumber::from_canonical(std::move(d)), lead - static_cast<long>(first)};
}

struct Bounds {
  Fraction lo;
  std::optional<Fraction> hi;
};

// Bounds on x from one constraint; hi is empty when the pattern opens with
// a floating gap. Continued mode raises hi by one unit in the last place.
Bounds constraint_bounds(const PrincipalConstraint& c, ReadingMode mode) {
  std::vector<int> lo_d, hi_d;
  for (const auto& t : c.pattern.tokens) {
    if (t.kind == PatternToken::Kind::FloatingGap) break;
    for (std::size_t k = 0; k < t.width(); ++k) {
      lo_d.push_back(t.min_digit());
      hi_d.push_back(t.max_digit());
    }
  }
  const auto f = static_cast<std::uint32_t>(c.factor);
  if (lo_d.empty()) return {Fraction{}, std::nullopt};
  // A first digit of zero cannot lead a product.
  if (hi_d.front() == 0)
    throw Error(Errc::Infeasible, "pattern " + format_pattern(c.pattern) +
                                      " cannot start a product");
  long hi_lead = c.lead;
  if (mode == ReadingMode::Continued) {
    std::size_t i = hi_d.size();
    while (i > 0 && ++hi_d[i - 1] == kBase) hi_d[--i] = 0;
    if (i == 0) {
      hi_d.insert(hi_d.begin(), 1);
      ++hi_lead;
    }
  }
  return {Fraction{reading(lo_d, c.lead), f}, Fraction{reading(hi_d, hi_lead), f}};
}

bool satisfies(const AbsoluteSex& x, const PrincipalConstraint& c) {
  AbsoluteSex prod = scale(x, static_cast<std::uint32_t>(c.factor));
  if (prod.lead_exponent != c.lead) return false;
  DigitPattern anchored = c.pattern;
  bool right = anchored.alignment == Alignment::AnchoredRight ||
               anchored.alignment == Alignment::Full;
  anchored.alignment = right ? Alignment::Full : Alignment::AnchoredLeft;
  return match_offset(anchored, prod.mantissa).has_value();
}

}  // namespace

PrincipalInference infer_principal(const std::vector<PrincipalConstraint>& constraints,
                                   const Corpus* regulars, ReadingMode mode) {
  PrincipalInference r;
  r.hi_inclusive = mode == ReadingMode::Truncated;
  for (const auto& c : constraints) {
    if (c.factor < 1 || c.factor >= kBase)
      throw Error(Errc::RangeError, "factor must lie in 1..59", c.factor);
    Bounds b = constraint_bounds(c, mode);
    if (compare(b.lo, r.lo) > 0) r.lo = b.lo;
    if (b.hi && (!r.hi || compare(*b.hi, *r.hi) < 0)) r.hi = b.hi;
  }
  if (r.hi) {
    auto c = compare(r.lo, *r.hi);
    if (c > 0 || (c == 0 && !r.hi_inclusive))
      throw Error(Errc::Infeasible, "constraints admit no principal number");
  }
  if (!regulars || constraints.empty()) return r;

  // x * f with f < 60 leads at lead(x) or lead(x) + 1.
  const long lead = constraints.front().lead;
  for (long l : {lead - 1, lead})
    for (const auto& e : regulars->entries) {
      AbsoluteSex x{e.value, l};
      Fraction fx{x, 1};
      if (compare(fx, r.lo) < 0) continue;
      if (r.hi) {
        auto c = compare(fx, *r.hi);
        if (c > 0 || (c == 0 && !r.hi_inclusive)) continue;
      }
      bool ok = std::all_of(constraints.begin(), constraints.end(),
                            [&](const PrincipalConstraint& c) { return satisfies(x, c); });
      if (ok) r.candidates.push_back(x);
    }
  std::sort(r.candidates.begin(), r.candidates.end(),
            [](const AbsoluteSex& a, const AbsoluteSex& b) { return compare_absolute(a, b) < 0; });
  return r;
}

}  // namespace sextab
