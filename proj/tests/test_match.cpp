#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sextab/match.hpp"

using namespace sextab;

namespace {

SexNumber D(const char* s) { return from_dotted(s); }

const Corpus& regulars30() {
  static const Corpus c = enumerate_regulars(30);
  return c;
}

// Direct digit comparison of the pattern's fixed tokens at a reported offset.
bool verify_at(const DigitPattern& p, const SexNumber& n, std::size_t off) {
  std::size_t pos = off;
  for (const auto& t : p.tokens) {
    if (t.kind == PatternToken::Kind::FloatingGap) return true;  // prefix verified
    for (std::size_t k = 0; k < t.width(); ++k, ++pos)
      if (pos >= n.size() || !t.accepts(n[pos])) return false;
  }
  return true;
}

}  // namespace

TEST(Match, TextBCounts) {
  auto p20 = parse_pattern("?4.9.1.26.24$");
  auto m = match(p20, regulars30());
  ASSERT_EQ(m.size(), 4u);
  bool saw = false;
  for (const auto& r : m) saw |= r.candidate == from_exponents({40, 42, 0});  // 9^11 12^20
  EXPECT_TRUE(saw);
  EXPECT_EQ(count_matches(parse_pattern("48.17~.16.48$"), regulars30()), 16u);
  EXPECT_EQ(count_matches(parse_pattern("7.7.7.7.7.7$"), enumerate_regulars(10)), 0u);
}

TEST(Match, ImpossibleSuffixAgreesWithBruteForce) {
  // No 5-smooth integer below 60^4 ends in the digits 7.7 either.
  std::size_t brute = 0;
  for (std::uint64_t n = 1; n < oracle::k60_4; ++n)
    if (n % 3600 == 7 * 60 + 7 && oracle::smooth(n)) ++brute;
  EXPECT_EQ(brute, 0u);
}

TEST(Match, SelfMatchExactFull) {
  Corpus c = enumerate_regulars(2);
  auto m = match(parse_pattern("^1.21$"), c);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].provenance.exponents, (ExponentTriple{0, 4, 0}));
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string s = "^" + c.entries[i].value.str() + "$";
    auto r = match(parse_pattern(s), c);
    ASSERT_EQ(r.size(), 1u) << s;
    EXPECT_EQ(r[0].entry_index, i);
  }
}

TEST(Match, SoundnessAndNaiveScan) {
  Corpus c = enumerate_regulars(6);
  ASSERT_LE(c.size(), 10000u);
  const char* patterns[] = {"1.?[10-20].*.40$", "^2.*{2}", "?5.0", "*.9$", "^1.4$", "12",
                            "?3.?3", "^?[1-5].*.?6$ --max 4"};
  for (const char* s : patterns) {
    auto p = parse_pattern(s);
    auto par = match(p, c, Exec::Parallel);
    auto ser = match(p, c, Exec::Serial);
    EXPECT_EQ(par, ser) << s;
    std::vector<std::size_t> naive;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (match_offset(p, c.entries[i].value)) naive.push_back(i);
    ASSERT_EQ(par.size(), naive.size()) << s;
    for (std::size_t k = 0; k < par.size(); ++k) {
      EXPECT_EQ(par[k].entry_index, naive[k]);
      EXPECT_TRUE(verify_at(p, par[k].candidate, par[k].alignment_offset)) << s;
    }
    EXPECT_EQ(count_matches(p, c), naive.size());
    EXPECT_EQ(count_matches(p, c, Exec::Serial), naive.size());
  }
}

TEST(Unique, ErrorsCarryCounts) {
  Corpus c = enumerate_regulars(3);
  try {
    unique_reconstruction({parse_pattern("?.?")}, c);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Ambiguous);
    EXPECT_EQ(static_cast<std::size_t>(e.detail()), count_matches(parse_pattern("?.?"), c));
  }
  try {
    unique_reconstruction({parse_pattern("^7$")}, c);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoMatch);
  }
  auto u = unique_reconstruction({parse_pattern("^1.21$"), parse_pattern("^6.40$")}, c);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[1].second.candidate, D("6.40"));
}

TEST(Fraction, CompareAndPrint) {
  Fraction a{AbsoluteSex{D("2.12"), 1}, 4};
  EXPECT_EQ(to_string(a), "33");
  Fraction b{AbsoluteSex{D("2.18"), 1}, 4};
  EXPECT_EQ(to_string(b), "34;30");
  EXPECT_TRUE(compare(a, b) < 0);
  EXPECT_TRUE(compare(Fraction{}, a) < 0);
  Fraction seventh{AbsoluteSex{D("1"), 0}, 7};
  EXPECT_EQ(exact_value(seventh), std::nullopt);
  EXPECT_EQ(to_string(seventh), "1/7");
  Fraction fourteen{AbsoluteSex{D("14"), 0}, 7};
  EXPECT_EQ(exact_value(fourteen), (AbsoluteSex{D("2"), 0}));
  Fraction mixed{AbsoluteSex{D("1.10"), 1}, 14};
  EXPECT_EQ(exact_value(mixed), (AbsoluteSex{D("5"), 0}));
}

TEST(Infer, TextLRowFour) {
  Corpus regs = enumerate_regulars(4);
  PrincipalInference r =
      infer_principal({{4, parse_pattern("^2.?[12-18]"), 1}}, &regs);
  EXPECT_EQ(exact_value(r.lo), (AbsoluteSex{D("33"), 0}));
  ASSERT_TRUE(r.hi);
  EXPECT_EQ(exact_value(*r.hi), (AbsoluteSex{D("34.30"), 0}));
  EXPECT_TRUE(r.hi_inclusive);
  ASSERT_FALSE(r.candidates.empty());
  for (const auto& x : r.candidates) {
    AbsoluteSex p = scale(x, 4);
    EXPECT_EQ(p.lead_exponent, 1);
    EXPECT_EQ(p.mantissa[0], 2);
    EXPECT_TRUE(p.mantissa.size() > 1 && p.mantissa[1] >= 12 && p.mantissa[1] <= 18);
  }
  // Brute force over x = k / 60^3 in [33, 34;30] with regular k.
  std::size_t brute = 0;
  for (std::uint64_t k = 33 * 216000; k <= 34 * 216000 + 108000; ++k) {
    if (!oracle::smooth(k)) continue;
    auto n = oracle::sex(k);
    if (n.size() <= 4) ++brute;
  }
  EXPECT_EQ(r.candidates.size(), brute);
}

TEST(Infer, PointAndInfeasible) {
  auto r = infer_principal({{1, parse_pattern("52.30"), 0}});
  EXPECT_TRUE(compare(r.lo, *r.hi) == 0);
  EXPECT_EQ(to_string(r.lo), "52;30");
  try {
    infer_principal({{2, parse_pattern("1.45$"), 1}, {2, parse_pattern("1.46$"), 1}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Infeasible);
  }
  EXPECT_THROW(infer_principal({{60, parse_pattern("1"), 0}}), Error);
  auto open = infer_principal({{2, parse_pattern("*.5"), 0}});
  EXPECT_FALSE(open.hi.has_value());
}

TEST(Infer, ContinuedReadingOfAllTextLRows) {
  std::vector<PrincipalConstraint> cs = {
      {1, parse_pattern("^?[30-39]"), 0},   {2, parse_pattern("^1"), 1},
      {3, parse_pattern("^1.?[30-59]"), 1}, {4, parse_pattern("^2.?[12-18]"), 1},
      {5, parse_pattern("^2.?[30-59]"), 1}, {6, parse_pattern("^3"), 1}};
  Corpus regs = enumerate_regulars(3);
  auto r = infer_principal(cs, &regs, ReadingMode::Continued);
  EXPECT_EQ(to_string(r.lo), "33");
  EXPECT_EQ(to_string(*r.hi), "34;45");
  EXPECT_FALSE(r.hi_inclusive);
  for (const auto& x : r.candidates) EXPECT_TRUE(compare_absolute(x, {D("34.45"), 0}) < 0);
  EXPECT_THROW(infer_principal(cs, &regs, ReadingMode::Truncated), Error);
}
