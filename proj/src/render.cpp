#include "sextab/render.hpp"

#include <vector>

namespace sextab {

namespace {

bool tens_multiple(int d) { return d >= 10 && d % 10 == 0; }
bool small_units(int d) { return d >= 1 && d <= 9; }

}  // namespace

SexNumber parse_number(std::string_view text, bool scribal) {
  if (!scribal) return from_dotted(text);
  // Validate the digits first so errors carry the original positions.
  from_dotted(text);
  std::vector<std::string_view> tok;
  for (std::size_t start = 0;;) {
    std::size_t dot = text.find('.', start);
    tok.push_back(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  auto value = [](std::string_view t) {
    int v = 0;
    for (char c : t) v = v * 10 + (c - '0');
    return v;
  };
  std::vector<int> raw;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    bool mark = tok[i] == "0" && i > 0 && i + 1 < tok.size() &&
                tens_multiple(value(tok[i - 1])) && small_units(value(tok[i + 1]));
    if (!mark) raw.push_back(value(tok[i]));
  }
  return canonicalize(raw);
}

std::string format_number(const SexNumber& a, const RenderOptions& opts) {
  const auto& d = a.digits();
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += opts.separator;
    bool between = i > 0 && i + 1 < d.size() && tens_multiple(d[i - 1]) &&
                   small_units(d[i + 1]);
    if (opts.zero_mark && d[i] == 0 && between) {
      s += "00";
      continue;
    }
    s += std::to_string(d[i]);
    if (opts.zero_mark && i + 1 < d.size() && tens_multiple(d[i]) && small_units(d[i + 1]))
      s += opts.separator + "0";
  }
  return s;
}

}  // namespace sextab
