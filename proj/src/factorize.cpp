#include "sextab/factorize.hpp"

#include <string>

namespace sextab {

namespace {

bool smooth(int d) {
  for (int p : {2, 3, 5})
    while (d % p == 0) d /= p;
  return d == 1;
}

// Exact division by the integer of a regular base; nullopt if it leaves a
// remainder at any prime step.
std::optional<SexNumber> try_divide_base(const SexNumber& a,
                                         const SexNumber& base) {
  if (base.size() == 1) {
    if (base.is_one()) return a;
    if (!divides(a, base[0])) return std::nullopt;
    return divide_exact(a, base[0]);
  }
  ExponentTriple t = to_exponents(base);
  DigitSeq le = detail::to_le(a);
  const std::pair<long, std::uint32_t> steps[3] = {{t.p, 2}, {t.q, 3}, {t.r, 5}};
  for (auto [e, prime] : steps)
    for (long i = 0; i < e; ++i)
      if (detail::div_small_le(le, prime) != 0) return std::nullopt;
  return detail::from_le(std::move(le));
}

}  // namespace

const std::vector<int>& default_divisor_set() {
  static const std::vector<int> set{54, 48, 45, 40, 36, 32, 30, 27, 25, 24, 20, 18,
                                    16, 15, 12, 10, 9,  8,  6,  5,  4,  3,  2};
  return set;
}

DivisorPolicy DivisorPolicy::greedy() { return greedy(default_divisor_set()); }

DivisorPolicy DivisorPolicy::greedy(std::vector<int> divisors) {
  for (int d : divisors) {
    if (d < 2 || d >= kBase)
      throw Error(Errc::RangeError, "divisor " + std::to_string(d) + " outside 2..59", d);
    if (!smooth(d))
      throw Error(Errc::NotRegular, "divisor " + std::to_string(d) + " is not 5-smooth", d);
  }
  return {PolicyMode::Greedy, std::move(divisors)};
}

bool divides(const SexNumber& a, int d) {
  return detail::mod_small(a, static_cast<std::uint32_t>(d)) == 0;
}

int choose_divisor(const SexNumber& a, const DivisorPolicy& policy) {
  if (a.is_one()) throw Error(Errc::NoDivisor, "1 needs no further division");
  auto first_of = [&](std::initializer_list<int> ds) {
    for (int d : ds)
      if (divides(a, d)) return d;
    throw Error(Errc::NoDivisor, a.str() + " is not divisible under the policy");
  };
  switch (policy.mode) {
    case PolicyMode::FixedNine: return first_of({9});
    case PolicyMode::FixedTwelveThenNine: return first_of({12, 9});
    case PolicyMode::FixedTwelveThenThree: return first_of({12, 3});
    case PolicyMode::Greedy: break;
  }
  for (int d : policy.divisor_set)
    if (divides(a, d)) return d;
  throw Error(Errc::NoDivisor, a.str() + " has no divisor in the policy set");
}

SexNumber divide_exact(const SexNumber& a, int d) {
  if (d < 2 || d >= kBase)
    throw Error(Errc::DigitOutOfRange, "divisor " + std::to_string(d), d);
  DigitSeq le = detail::to_le(a);
  std::uint32_t rem = detail::div_small_le(le, static_cast<std::uint32_t>(d));
  if (rem)
    throw Error(Errc::NotDivisible,
                a.str() + " / " + std::to_string(d) + " leaves " + std::to_string(rem),
                static_cast<long>(rem));
  return detail::from_le(std::move(le));
}

FactorChain factor_chain(const SexNumber& a, const DivisorPolicy& policy,
                         bool with_reciprocals) {
  FactorChain chain;
  SexNumber cur = a;
  while (!cur.is_one()) {
    int d = choose_divisor(cur, policy);
    chain.rows.push_back({cur, d});
    cur = divide_exact(cur, d);
  }
  chain.rows.push_back({cur, std::nullopt});
  if (with_reciprocals) {
    chain.reciprocals.resize(chain.rows.size());
    SexNumber acc;
    chain.reciprocals.back() = acc;
    for (std::size_t k = chain.rows.size() - 1; k-- > 0;) {
      acc = mul(acc, reciprocal(SexNumber::from_integer(
                         static_cast<std::uint64_t>(*chain.rows[k].divisor))));
      chain.reciprocals[k] = acc;
    }
  }
  return chain;
}

VerifyResult verify_power_product(const SexNumber& a,
                                  const std::vector<PowerClaim>& claims) {
  VerifyResult res;
  SexNumber cur = a;
  for (const auto& claim : claims) {
    for (unsigned i = 0; i < claim.exponent; ++i) {
      auto q = try_divide_base(cur, claim.base);
      if (!q) return res;
      cur = *q;
      res.chain.push_back({cur, claim.base});
    }
  }
  res.ok = cur.is_one();
  return res;
}

}  // namespace sextab
