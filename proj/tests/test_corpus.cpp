#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracle.hpp"
#include "sextab/corpus.hpp"

using namespace sextab;

namespace {

SexNumber D(const char* s) { return from_dotted(s); }

std::vector<SexNumber> values(const Corpus& c) {
  std::vector<SexNumber> v;
  for (const auto& e : c.entries) v.push_back(e.value);
  return v;
}

const CorpusEntry* find(const Corpus& c, const SexNumber& n) {
  for (const auto& e : c.entries)
    if (e.value == n) return &e;
  return nullptr;
}

}  // namespace

TEST(Regulars, OneDigit) {
  Corpus c = enumerate_regulars(1);
  std::vector<SexNumber> want;
  for (std::uint64_t n = 1; n < 60; ++n)
    if (oracle::smooth(n)) want.push_back(oracle::sex(n));
  std::sort(want.begin(), want.end());
  EXPECT_EQ(values(c), want);
  EXPECT_EQ(c.size(), 25u);
}

TEST(Regulars, BruteForceUpToFourDigits) {
  std::set<SexNumber> brute;
  for (std::uint64_t n = 1; n < oracle::k60_4; ++n)
    if (n % 60 != 0 && oracle::smooth(n)) brute.insert(oracle::sex(n));
  Corpus c = enumerate_regulars(4);
  EXPECT_EQ(values(c), std::vector<SexNumber>(brute.begin(), brute.end()));
  for (std::size_t m = 1; m <= 4; ++m) {
    std::size_t expect = 0;
    for (const auto& s : brute) expect += s.size() <= m;
    EXPECT_EQ(enumerate_regulars(m, Exec::Serial).size(), expect);
  }
}

TEST(Regulars, ContainsAttestedAndIsOrdered) {
  EXPECT_NE(find(enumerate_regulars(2), D("1.21")), nullptr);
  Corpus c = enumerate_regulars(30);
  EXPECT_EQ(c.size(), 25059u);
  const auto* e = find(c, pow(D("9"), 46));
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->provenance.exponents, (ExponentTriple{0, 92, 0}));
  for (std::size_t i = 1; i < c.size(); ++i) ASSERT_LT(c.entries[i - 1].value, c.entries[i].value);
  std::size_t prev = 0;
  for (std::size_t m = 1; m <= 12; ++m) {
    std::size_t n = enumerate_regulars(m).size();
    EXPECT_GT(n, prev);
    prev = n;
  }
}

TEST(Regulars, BudgetAndRange) {
  try {
    enumerate_regulars(41);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
  EXPECT_THROW(enumerate_regulars(0), Error);
}

TEST(Kernels, ParallelEqualsSerial) {
  for (std::size_t m : {1u, 5u, 17u}) {
    EXPECT_EQ(kernels::regulars_parallel(m), kernels::regulars_serial(m));
    auto bases = kernels::regulars_serial(m);
    EXPECT_EQ(kernels::fourth_powers_parallel(bases), kernels::fourth_powers_serial(bases));
    EXPECT_EQ(kernels::products_parallel(bases, 1, 59), kernels::products_serial(bases, 1, 59));
  }
}

TEST(FourthPowers, ContainsThreeToTheNinetySecond) {
  Corpus c = build_corpus(CorpusSpec::fourth_powers(9));
  const auto* e = find(c, pow(D("9"), 46));
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->provenance.constructions.size(), 1u);
  EXPECT_EQ(e->provenance.constructions[0].base, D("2.1.4.8.3.0.27"));
  EXPECT_EQ(e->provenance.constructions[0].k, 4u);
  for (const auto& x : c.entries) {
    ASSERT_EQ(from_exponents(*x.provenance.exponents), x.value);
    ASSERT_EQ(pow(x.provenance.constructions.front().base, 4), x.value);
  }
}

TEST(Products, ProvenanceLists) {
  Corpus c = build_corpus(CorpusSpec::products(1, 59, 8));
  const auto* e = find(c, D("1.4.26.21.15.29.46.40"));
  ASSERT_NE(e, nullptr);
  Construction want{Construction::Kind::Product, 42, D("1.32.3.21.47.51.6.40")};
  EXPECT_NE(std::find(e->provenance.constructions.begin(), e->provenance.constructions.end(),
                      want),
            e->provenance.constructions.end());
  for (const auto& x : c.entries) {
    for (const auto& k : x.provenance.constructions)
      ASSERT_EQ(mul_digit(k.base, static_cast<int>(k.k)), x.value);
    ASSERT_EQ(x.provenance.exponents.has_value(), is_regular(x.value));
  }
  // 7 * 1 is non-regular; 2 * 3 and 3 * 2 and 6 * 1 merge into one entry.
  EXPECT_FALSE(find(c, D("7"))->provenance.exponents.has_value());
  EXPECT_GE(find(c, D("6"))->provenance.constructions.size(), 3u);
}

TEST(Products, Budget) {
  CorpusSpec s = CorpusSpec::products(1, 59, 10);
  s.budget = 1000;
  try {
    build_corpus(s);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
  EXPECT_THROW(build_corpus(CorpusSpec::products(0, 59, 2)), Error);
  EXPECT_THROW(build_corpus(CorpusSpec::products(1, 60, 2)), Error);
}

TEST(Powers, NineSquared) {
  Corpus c = build_corpus(CorpusSpec::powers(D("9"), 2));
  EXPECT_EQ(values(c), (std::vector<SexNumber>{D("1"), D("9"), D("1.21")}));
  Corpus seven = build_corpus(CorpusSpec::powers(D("7"), 3));
  EXPECT_EQ(seven.size(), 4u);
  EXPECT_FALSE(seven.entries.back().provenance.exponents.has_value());
}

TEST(Index, RoundTrip) {
  for (const CorpusSpec& s :
       {CorpusSpec::regulars(10), CorpusSpec::fourth_powers(3), CorpusSpec::products(1, 59, 3),
        CorpusSpec::powers(D("7"), 5)}) {
    Corpus c = build_corpus(s);
    std::stringstream ss;
    save_index(c, ss);
    std::string text = ss.str();
    Corpus back = load_index(ss);
    EXPECT_EQ(back.spec, c.spec) << s.describe();
    EXPECT_EQ(back.entries, c.entries) << s.describe();
    std::stringstream again;
    save_index(back, again);
    EXPECT_EQ(again.str(), text);
  }
}

TEST(Index, Rejections) {
  std::stringstream ss;
  save_index(enumerate_regulars(2), ss);
  std::string good = ss.str();
  auto load = [](const std::string& t, std::optional<CorpusKind> k = std::nullopt) {
    std::stringstream in(t);
    try {
      load_index(in, k);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::AllZero;  // sentinel: loaded
  };
  EXPECT_EQ(load(good), Errc::AllZero);
  EXPECT_EQ(load(good, CorpusKind::Products), Errc::VersionMismatch);
  std::string v2 = good;
  v2.replace(v2.find(" v1"), 3, " v2");
  EXPECT_EQ(load(v2), Errc::VersionMismatch);
  EXPECT_EQ(load(good + "- - - 1 60\n"), Errc::FormatError);
  EXPECT_EQ(load(good + "0 0 0 1 1\n"), Errc::FormatError);  // out of order
  EXPECT_EQ(load(good + "1 0 0 2 1.21\n"), Errc::FormatError);
  EXPECT_EQ(load("#regulars max_digits=2 v1\n0 4 0 3 1.21\n"), Errc::FormatError);
  EXPECT_EQ(load("#regulars max_digits=2 v1\n0 0 0 1 0.1\n"), Errc::FormatError);
  EXPECT_EQ(load("#squares v1\n"), Errc::FormatError);
  EXPECT_EQ(load(""), Errc::FormatError);
}
