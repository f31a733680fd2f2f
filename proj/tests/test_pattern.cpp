#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sextab/pattern.hpp"

using namespace sextab;
using K = PatternToken::Kind;

namespace {

SexNumber D(const char* s) { return from_dotted(s); }

Errc parse_error(const char* s) {
  try {
    parse_pattern(s);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << s << " parsed";
  return Errc::FormatError;
}

// Independent check: every placement of the fixed tokens, written out.
bool naive_match(const DigitPattern& p, const DigitSeq& d) {
  if (p.max_total_digits && d.size() > *p.max_total_digits) return false;
  std::vector<PatternToken> pre, post;
  bool floating = false;
  for (const auto& t : p.tokens) {
    if (t.kind == K::FloatingGap) {
      floating = true;
      continue;
    }
    for (std::size_t k = 0; k < t.width(); ++k)
      (floating ? post : pre).push_back(t.kind == K::Gap ? PatternToken::any() : t);
  }
  bool left = p.alignment == Alignment::AnchoredLeft || p.alignment == Alignment::Full;
  bool right = p.alignment == Alignment::AnchoredRight || p.alignment == Alignment::Full;
  auto at = [&](const std::vector<PatternToken>& run, std::size_t off) {
    if (off + run.size() > d.size()) return false;
    for (std::size_t i = 0; i < run.size(); ++i)
      if (!run[i].accepts(d[off + i])) return false;
    return true;
  };
  for (std::size_t a = 0; a <= d.size(); ++a) {
    if (left && a != 0) continue;
    if (!at(pre, a)) continue;
    if (!floating) {
      if (right && a + pre.size() != d.size()) continue;
      return true;
    }
    for (std::size_t b = a + pre.size(); b <= d.size(); ++b) {
      if (right && b + post.size() != d.size()) continue;
      if (at(post, b)) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Parse, Examples) {
  auto p = parse_pattern("*.4.9.1.26.24$ --max 30");
  ASSERT_EQ(p.tokens.size(), 6u);
  EXPECT_EQ(p.tokens[0].kind, K::FloatingGap);
  EXPECT_EQ(p.tokens[1], PatternToken::exact(4));
  EXPECT_EQ(p.alignment, Alignment::AnchoredRight);
  EXPECT_EQ(p.max_total_digits, 30u);

  auto q = parse_pattern("^16.34.?.*");
  EXPECT_EQ(q.alignment, Alignment::AnchoredLeft);
  EXPECT_EQ(q.tokens[2].kind, K::Any);
  EXPECT_EQ(q.tokens[3].kind, K::FloatingGap);

  auto r = parse_pattern("?[30-50]");
  ASSERT_EQ(r.tokens.size(), 1u);
  EXPECT_EQ(r.tokens[0], PatternToken::range(30, 50));
  EXPECT_EQ(r.alignment, Alignment::Floating);

  auto u = parse_pattern("^?4.17~.*{2}$");
  EXPECT_EQ(u.alignment, Alignment::Full);
  EXPECT_EQ(u.tokens[0], PatternToken::units(4));
  EXPECT_TRUE(u.tokens[1].uncertain);
  EXPECT_EQ(u.tokens[2], PatternToken::gap(2));
  EXPECT_EQ(u.fixed_width(), 4u);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("1..2"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("*.1.*"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("1.2 --mux 3"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("60"), Errc::RangeError);
  EXPECT_EQ(parse_error("?[40-30]"), Errc::RangeError);
  EXPECT_EQ(parse_error("?[0-60]"), Errc::RangeError);
  EXPECT_EQ(parse_error("1.2.3 --max 2"), Errc::RangeError);
  try {
    parse_pattern("1.2.x");
  } catch (const Error& e) {
    EXPECT_EQ(e.detail(), 4);
  }
}

TEST(Parse, RoundTrip) {
  for (const char* s : {"*.4.9.1.26.24$ --max 30", "^16.34.?.*", "?[30-50]", "^?4.17~.*{2}$",
                        "1.*.2", "*{3}.5$"}) {
    auto p = parse_pattern(s);
    EXPECT_EQ(format_pattern(p), s);
    EXPECT_EQ(parse_pattern(format_pattern(p)), p);
  }
}

TEST(Widen, UncertainDigits) {
  auto w = widen_uncertain(parse_pattern("48.17~.16.48$"));
  EXPECT_EQ(w.tokens[1], PatternToken::range(10, 19));
  EXPECT_EQ(w.tokens[0], PatternToken::exact(48));
}

TEST(Match, Offsets) {
  SexNumber n = D("1.2.3.4.5");
  EXPECT_EQ(match_offset(parse_pattern("3.4"), n), 2u);
  EXPECT_EQ(match_offset(parse_pattern("^1.2"), n), 0u);
  EXPECT_EQ(match_offset(parse_pattern("^2.3"), n), std::nullopt);
  EXPECT_EQ(match_offset(parse_pattern("4.5$"), n), 3u);
  EXPECT_EQ(match_offset(parse_pattern("3.4$"), n), std::nullopt);
  EXPECT_EQ(match_offset(parse_pattern("^1.*.5$"), n), 0u);
  EXPECT_EQ(match_offset(parse_pattern("*.4.5$"), n), 3u);
  EXPECT_EQ(match_offset(parse_pattern("^1.2.3.4.5$"), n), 0u);
  EXPECT_EQ(match_offset(parse_pattern("^1.2.3.4$"), n), std::nullopt);
  EXPECT_EQ(match_offset(parse_pattern("?4.5$"), D("14.5")), 0u);
  EXPECT_EQ(match_offset(parse_pattern("?4.5$"), D("15.5")), std::nullopt);
  EXPECT_EQ(match_offset(parse_pattern("4.5$ --max 4"), n), std::nullopt);
}

TEST(Property, MatchAgreesWithNaivePlacement) {
  const char* patterns[] = {"1",       "^1",        "1$",       "^1$",        "?.0",
                            "1.*.2",   "^1.*.?[2-9]$", "*.?1$", "?[0-9].*{2}.1", "^*.1",
                            "3.*",     "*{2}$",     "1.?.1",    "^?5.*.0.?$", "*"};
  for (int i = 0; i < 5000; ++i) {
    std::size_t len = oracle::uniform(1, 7);
    DigitSeq d(len);
    for (auto& x : d) x = static_cast<Digit>(oracle::uniform(0, 3) == 0 ? oracle::uniform(0, 59)
                                                                       : oracle::uniform(0, 3));
    for (const char* s : patterns) {
      auto p = parse_pattern(s);
      auto off = match_offset(p, std::span<const Digit>(d));
      ASSERT_EQ(off.has_value(), naive_match(p, d)) << s;
    }
  }
}
