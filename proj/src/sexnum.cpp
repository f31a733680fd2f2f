#include "sextab/sexnum.hpp"

#include <algorithm>

namespace sextab {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::AllZero: return "AllZero";
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NoDivisor: return "NoDivisor";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::RangeError: return "RangeError";
    case Errc::Ambiguous: return "Ambiguous";
    case Errc::NoMatch: return "NoMatch";
    case Errc::Infeasible: return "Infeasible";
    case Errc::FormatError: return "FormatError";
    case Errc::VersionMismatch: return "VersionMismatch";
  }
  return "Error";
}

SexDigit::SexDigit(int v) {
  if (v < 0 || v >= kBase)
    throw Error(Errc::DigitOutOfRange, "digit " + std::to_string(v), v);
  v_ = static_cast<Digit>(v);
}

SexNumber SexNumber::from_canonical(DigitSeq digits) {
  if (digits.empty() || digits.front() == 0 || digits.back() == 0)
    throw Error(Errc::FormatError, "not a canonical digit sequence");
  for (Digit d : digits)
    if (d >= kBase)
      throw Error(Errc::DigitOutOfRange, "digit " + std::to_string(d), d);
  return SexNumber(std::move(digits));
}

SexNumber SexNumber::from_integer(std::uint64_t n) {
  if (n == 0) throw Error(Errc::AllZero, "zero has no relative form");
  DigitSeq le;
  for (; n; n /= kBase) le.push_back(static_cast<Digit>(n % kBase));
  return detail::from_le(std::move(le));
}

std::string SexNumber::str() const {
  std::string s;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(d_[i]);
  }
  return s;
}

std::strong_ordering SexNumber::operator<=>(const SexNumber& o) const {
  if (auto c = d_.size() <=> o.d_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(d_.begin(), d_.end(),
                                                o.d_.begin(), o.d_.end());
}

SexNumber canonicalize_digits(DigitSeq raw) {
  for (Digit d : raw)
    if (d >= kBase)
      throw Error(Errc::DigitOutOfRange, "digit " + std::to_string(d), d);
  auto first = std::find_if(raw.begin(), raw.end(), [](Digit d) { return d; });
  if (first == raw.end()) throw Error(Errc::AllZero, "all digits are zero");
  auto last = std::find_if(raw.rbegin(), raw.rend(), [](Digit d) { return d; });
  return SexNumber(DigitSeq(first, last.base()));
}

SexNumber canonicalize(std::span<const int> raw) {
  DigitSeq d;
  d.reserve(raw.size());
  for (int v : raw) d.push_back(static_cast<Digit>(SexDigit(v).value()));
  return canonicalize_digits(std::move(d));
}

SexNumber from_dotted(std::string_view text) {
  std::vector<int> raw;
  std::size_t i = 0;
  while (true) {
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 999) break;
      ++i;
    }
    if (i == start)
      throw Error(Errc::SyntaxError,
                  "expected digit at position " + std::to_string(i) + " in '" +
                      std::string(text) + "'",
                  static_cast<long>(i));
    if (v >= kBase)
      throw Error(Errc::DigitOutOfRange, "digit " + std::to_string(v), v);
    raw.push_back(static_cast<int>(v));
    if (i == text.size()) break;
    if (text[i] != '.')
      throw Error(Errc::SyntaxError,
                  "unexpected '" + std::string(1, text[i]) + "' at position " +
                      std::to_string(i),
                  static_cast<long>(i));
    ++i;
  }
  return canonicalize(raw);
}

namespace detail {

DigitSeq to_le(const SexNumber& a) {
  return DigitSeq(a.digits().rbegin(), a.digits().rend());
}

SexNumber from_le(DigitSeq le) {
  std::reverse(le.begin(), le.end());
  return canonicalize_digits(std::move(le));
}

void mul_small_le(DigitSeq& le, std::uint32_t m) {
  std::uint32_t carry = 0;
  for (Digit& d : le) {
    std::uint32_t t = d * m + carry;
    d = static_cast<Digit>(t % kBase);
    carry = t / kBase;
  }
  for (; carry; carry /= kBase) le.push_back(static_cast<Digit>(carry % kBase));
}

std::uint32_t div_small_le(DigitSeq& le, std::uint32_t m) {
  std::uint32_t rem = 0;
  for (auto it = le.rbegin(); it != le.rend(); ++it) {
    std::uint32_t cur = rem * kBase + *it;
    *it = static_cast<Digit>(cur / m);
    rem = cur % m;
  }
  while (le.size() > 1 && le.back() == 0) le.pop_back();
  return rem;
}

std::uint32_t mod_small(const SexNumber& a, std::uint32_t m) {
  std::uint32_t rem = 0;
  for (Digit d : a.digits()) rem = (rem * kBase + d) % m;
  return rem;
}

}  // namespace detail

SexNumber mul(const SexNumber& a, const SexNumber& b) {
  const auto& x = a.digits();
  const auto& y = b.digits();
  std::vector<std::uint64_t> acc(x.size() + y.size(), 0);
  // acc is little-endian; digit i of x sits at power (n-1-i).
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t pi = x.size() - 1 - i;
    for (std::size_t j = 0; j < y.size(); ++j)
      acc[pi + y.size() - 1 - j] += std::uint64_t{x[i]} * y[j];
  }
  DigitSeq le(acc.size());
  std::uint64_t carry = 0;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    std::uint64_t t = acc[k] + carry;
    le[k] = static_cast<Digit>(t % kBase);
    carry = t / kBase;
  }
  return detail::from_le(std::move(le));
}

SexNumber mul_digit(const SexNumber& a, int d) {
  if (d < 1 || d >= kBase)
    throw Error(Errc::DigitOutOfRange, "multiplier " + std::to_string(d), d);
  DigitSeq le = detail::to_le(a);
  detail::mul_small_le(le, static_cast<std::uint32_t>(d));
  return detail::from_le(std::move(le));
}

DigitSeq add_aligned(std::span<const Digit> a, std::span<const Digit> b) {
  std::size_t n = std::max(a.size(), b.size());
  DigitSeq out(n + 1, 0);
  unsigned carry = 0;
  for (std::size_t k = 0; k < n; ++k) {
    unsigned t = carry;
    if (k < a.size()) t += a[a.size() - 1 - k];
    if (k < b.size()) t += b[b.size() - 1 - k];
    out[n - k] = static_cast<Digit>(t % kBase);
    carry = t / kBase;
  }
  if (carry)
    out[0] = static_cast<Digit>(carry);
  else
    out.erase(out.begin());
  return out;
}

SexNumber pow(const SexNumber& a, unsigned k) {
  SexNumber result;
  SexNumber base = a;
  while (k) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

std::size_t digit_count(const SexNumber& a) { return a.size(); }

ExponentTriple ExponentTriple::canonical() const {
  // Smallest shift n making every exponent nonnegative; at that shift one of
  // p in {0,1}, q = 0, r = 0 holds, so the result is not divisible by 60.
  auto ceil_half = [](long v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); };
  long n = std::max({ceil_half(-p), -q, -r});
  return {p + 2 * n, q + n, r + n};
}

SexNumber from_exponents(const ExponentTriple& t) {
  ExponentTriple c = t.canonical();
  DigitSeq le{1};
  auto apply = [&le](long e, std::uint32_t prime, std::uint32_t chunk,
                     long chunk_exp) {
    for (; e >= chunk_exp; e -= chunk_exp) detail::mul_small_le(le, chunk);
    for (; e > 0; --e) detail::mul_small_le(le, prime);
  };
  apply(c.p, 2, 32, 5);
  apply(c.q, 3, 27, 3);
  apply(c.r, 5, 25, 2);
  return detail::from_le(std::move(le));
}

ExponentTriple to_exponents(const SexNumber& a) {
  DigitSeq le = detail::to_le(a);
  long e[3] = {0, 0, 0};
  const std::uint32_t primes[3] = {2, 3, 5};
  // Each prime divides 60, so divisibility is decided by the last digit.
  for (int i = 0; i < 3; ++i) {
    while (le[0] % primes[i] == 0) {
      detail::div_small_le(le, primes[i]);
      ++e[i];
    }
  }
  if (!(le.size() == 1 && le[0] == 1))
    throw Error(Errc::NotRegular, a.str() + " has a prime factor other than 2, 3, 5");
  return ExponentTriple{e[0], e[1], e[2]}.canonical();
}

bool is_regular(const SexNumber& a) {
  try {
    to_exponents(a);
    return true;
  } catch (const Error&) {
    return false;
  }
}

SexNumber reciprocal(const SexNumber& a) {
  return from_exponents(to_exponents(a).negated());
}

std::strong_ordering compare_absolute(const AbsoluteSex& a,
                                      const AbsoluteSex& b) {
  if (auto c = a.lead_exponent <=> b.lead_exponent; c != 0) return c;
  // Same leading place; canonical mantissas end in a nonzero digit, so a
  // proper prefix is the smaller value.
  const auto& x = a.mantissa.digits();
  const auto& y = b.mantissa.digits();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(),
                                                y.end());
}

AbsoluteSex scale(const AbsoluteSex& a, std::uint32_t f) {
  if (f == 0) throw Error(Errc::AllZero, "scale by zero");
  DigitSeq le = detail::to_le(a.mantissa);
  std::size_t before = le.size();
  detail::mul_small_le(le, f);
  long lead = a.lead_exponent + static_cast<long>(le.size() - before);
  return {detail::from_le(std::move(le)), lead};
}

AbsoluteSex divide(const AbsoluteSex& a, std::uint32_t f) {
  if (f == 0) throw Error(Errc::AllZero, "division by zero");
  std::uint32_t g = f;
  for (std::uint32_t p : {2u, 3u, 5u})
    while (g % p == 0) g /= p;
  if (g != 1)
    throw Error(Errc::NotRegular, std::to_string(f) + " has no finite reciprocal");
  const auto& d = a.mantissa.digits();
  DigitSeq q;
  std::uint32_t rem = 0;
  for (std::size_t i = 0; i < d.size() || rem; ++i) {
    std::uint32_t cur = rem * kBase + (i < d.size() ? d[i] : 0);
    q.push_back(static_cast<Digit>(cur / f));
    rem = cur % f;
  }
  long lead = a.lead_exponent;
  std::size_t skip = 0;
  while (q[skip] == 0) ++skip, --lead;
  q.erase(q.begin(), q.begin() + static_cast<long>(skip));
  return {canonicalize_digits(std::move(q)), lead};
}

std::string to_string(const AbsoluteSex& a) {
  const auto& d = a.mantissa.digits();
  long lead = a.lead_exponent;
  std::string s;
  auto put = [&s](long v, char sep) {
    if (!s.empty() && s.back() != ';') s += sep;
    s += std::to_string(v);
  };
  if (lead < 0) {
    s = "0;";
    for (long i = 0; i < -lead - 1; ++i) put(0, ',');
    for (Digit x : d) put(x, ',');
    return s;
  }
  for (long pos = 0; pos <= lead; ++pos)
    put(pos < static_cast<long>(d.size()) ? d[static_cast<std::size_t>(pos)] : 0, ',');
  if (static_cast<long>(d.size()) > lead + 1) {
    s += ';';
    for (std::size_t i = static_cast<std::size_t>(lead) + 1; i < d.size(); ++i)
      put(d[i], ',');
  }
  return s;
}

}  // namespace sextab
