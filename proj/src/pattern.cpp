#include "sextab/pattern.hpp"

#include <cctype>

namespace sextab {

PatternToken PatternToken::exact(int d, bool uncertain) {
  if (d < 0 || d >= kBase)
    throw Error(Errc::RangeError, "digit " + std::to_string(d) + " outside 0..59", d);
  return {Kind::Exact, d, 0, uncertain};
}

PatternToken PatternToken::range(int lo, int hi) {
  if (lo < 0 || hi >= kBase || lo > hi)
    throw Error(Errc::RangeError,
                "range " + std::to_string(lo) + "-" + std::to_string(hi) + " invalid", lo);
  return {Kind::Range, lo, hi, false};
}

PatternToken PatternToken::units(int u) {
  if (u < 0 || u > 9)
    throw Error(Errc::RangeError, "units digit " + std::to_string(u) + " outside 0..9", u);
  return {Kind::Units, u, 0, false};
}

PatternToken PatternToken::gap(int k) {
  if (k < 1) throw Error(Errc::RangeError, "gap length must be positive", k);
  return {Kind::Gap, k, 0, false};
}

bool PatternToken::accepts(Digit d) const {
  switch (kind) {
    case Kind::Exact: return d == lo;
    case Kind::Range: return d >= lo && d <= hi;
    case Kind::Units: return d % 10 == lo;
    default: return true;
  }
}

int PatternToken::min_digit() const {
  switch (kind) {
    case Kind::Exact:
    case Kind::Range:
    case Kind::Units: return lo;
    default: return 0;
  }
}

int PatternToken::max_digit() const {
  switch (kind) {
    case Kind::Exact: return lo;
    case Kind::Range: return hi;
    case Kind::Units: return 50 + lo;
    default: return kBase - 1;
  }
}

std::size_t DigitPattern::fixed_width() const {
  std::size_t w = 0;
  for (const auto& t : tokens)
    if (t.kind != PatternToken::Kind::FloatingGap) w += t.width();
  return w;
}

bool DigitPattern::has_floating_gap() const {
  for (const auto& t : tokens)
    if (t.kind == PatternToken::Kind::FloatingGap) return true;
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  DigitPattern run() {
    DigitPattern p;
    skip_space();
    bool left = eat('^');
    bool right = false;
    while (true) {
      p.tokens.push_back(token());
      if (eat('.')) continue;
      break;
    }
    if (eat('$')) right = true;
    skip_space();
    if (i_ < s_.size()) {
      expect_word("--max");
      skip_space();
      std::size_t at = i_;
      long n = number();
      if (n < 1) fail("--max must be positive", at);
      p.max_total_digits = static_cast<std::size_t>(n);
      skip_space();
      if (i_ < s_.size()) fail("trailing input", i_);
    }
    p.alignment = left && right ? Alignment::Full
                  : left        ? Alignment::AnchoredLeft
                  : right       ? Alignment::AnchoredRight
                                : Alignment::Floating;
    int floating = 0;
    for (const auto& t : p.tokens) floating += t.kind == PatternToken::Kind::FloatingGap;
    if (floating > 1) fail("more than one floating gap", 0);
    if (p.max_total_digits && *p.max_total_digits < p.fixed_width())
      throw Error(Errc::RangeError, "--max below the pattern's fixed width",
                  static_cast<long>(*p.max_total_digits));
    return p;
  }

 private:
  PatternToken token() {
    std::size_t at = i_;
    if (eat('?')) {
      if (eat('[')) {
        long lo = number();
        if (!eat('-')) fail("expected '-' in range", i_);
        long hi = number();
        if (!eat(']')) fail("expected ']'", i_);
        return PatternToken::range(static_cast<int>(lo), static_cast<int>(hi));
      }
      if (digit_ahead()) return PatternToken::units(static_cast<int>(number()));
      return PatternToken::any();
    }
    if (eat('*')) {
      if (eat('{')) {
        long k = number();
        if (!eat('}')) fail("expected '}'", i_);
        return PatternToken::gap(static_cast<int>(k));
      }
      return PatternToken::floating();
    }
    if (digit_ahead()) {
      long d = number();
      bool unsure = eat('~');
      return PatternToken::exact(static_cast<int>(d), unsure);
    }
    fail("expected a token", at);
  }

  long number() {
    std::size_t start = i_;
    long v = 0;
    while (digit_ahead() && i_ - start < 6) v = v * 10 + (s_[i_++] - '0');
    if (i_ == start) fail("expected a number", start);
    return v;
  }

  bool digit_ahead() const {
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  bool eat(char c) {
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect_word(std::string_view w) {
    if (s_.substr(i_, w.size()) != w) fail("expected '" + std::string(w) + "'", i_);
    i_ += w.size();
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw Error(Errc::SyntaxError,
                msg + " at position " + std::to_string(at) + " in '" + std::string(s_) + "'",
                static_cast<long>(at));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

// Tokens expanded to one entry per digit position, split at the floating gap.
struct Expanded {
  std::vector<PatternToken> pre;
  std::vector<PatternToken> post;
  bool floating = false;
};

Expanded expand(const DigitPattern& p) {
  Expanded e;
  for (const auto& t : p.tokens) {
    if (t.kind == PatternToken::Kind::FloatingGap) {
      e.floating = true;
      continue;
    }
    auto& dst = e.floating ? e.post : e.pre;
    if (t.kind == PatternToken::Kind::Gap)
      dst.insert(dst.end(), static_cast<std::size_t>(t.lo), PatternToken::any());
    else
      dst.push_back(t);
  }
  return e;
}

bool fits(const std::vector<PatternToken>& run, std::span<const Digit> d,
          std::size_t at) {
  if (at + run.size() > d.size()) return false;
  for (std::size_t i = 0; i < run.size(); ++i)
    if (!run[i].accepts(d[at + i])) return false;
  return true;
}

}  // namespace

DigitPattern parse_pattern(std::string_view source) { return Parser(source).run(); }

std::string format_pattern(const DigitPattern& p) {
  std::string s;
  if (p.alignment == Alignment::AnchoredLeft || p.alignment == Alignment::Full) s += '^';
  for (std::size_t i = 0; i < p.tokens.size(); ++i) {
    if (i) s += '.';
    const auto& t = p.tokens[i];
    switch (t.kind) {
      case PatternToken::Kind::Exact:
        s += std::to_string(t.lo);
        if (t.uncertain) s += '~';
        break;
      case PatternToken::Kind::Any: s += '?'; break;
      case PatternToken::Kind::Range:
        s += "?[" + std::to_string(t.lo) + "-" + std::to_string(t.hi) + "]";
        break;
      case PatternToken::Kind::Units: s += "?" + std::to_string(t.lo); break;
      case PatternToken::Kind::Gap: s += "*{" + std::to_string(t.lo) + "}"; break;
      case PatternToken::Kind::FloatingGap: s += '*'; break;
    }
  }
  if (p.alignment == Alignment::AnchoredRight || p.alignment == Alignment::Full) s += '$';
  if (p.max_total_digits) s += " --max " + std::to_string(*p.max_total_digits);
  return s;
}

DigitPattern widen_uncertain(const DigitPattern& p) {
  DigitPattern w = p;
  for (auto& t : w.tokens)
    if (t.kind == PatternToken::Kind::Exact && t.uncertain) {
      int tens = t.lo / 10 * 10;
      t = PatternToken::range(tens, tens + 9);
    }
  return w;
}

std::optional<std::size_t> match_offset(const DigitPattern& p,
                                        std::span<const Digit> d) {
  const std::size_t n = d.size();
  if (p.max_total_digits && n > *p.max_total_digits) return std::nullopt;
  const bool left = p.alignment == Alignment::AnchoredLeft || p.alignment == Alignment::Full;
  const bool right = p.alignment == Alignment::AnchoredRight || p.alignment == Alignment::Full;
  Expanded e = expand(p);
  const std::size_t need = e.pre.size() + e.post.size();
  if (need > n) return std::nullopt;

  if (!e.floating) {
    std::size_t first = right ? n - e.pre.size() : 0;
    std::size_t last = left ? 0 : n - e.pre.size();
    if (left && right && n != e.pre.size()) return std::nullopt;
    for (std::size_t off = first; off <= last; ++off)
      if (fits(e.pre, d, off)) return off;
    return std::nullopt;
  }

  std::size_t last_pre = left ? 0 : n - need;
  for (std::size_t off = 0; off <= last_pre; ++off) {
    if (!fits(e.pre, d, off)) continue;
    std::size_t from = off + e.pre.size();
    std::size_t s_first = right ? n - e.post.size() : from;
    std::size_t s_last = n - e.post.size();
    for (std::size_t s = s_first; s <= s_last; ++s)
      if (fits(e.post, d, s)) return e.pre.empty() ? s : off;
    // The tail's admissible starts only shrink as off grows.
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace sextab
