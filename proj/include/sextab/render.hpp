#pragma once

#include <string>
#include <string_view>

#include "sextab/sexnum.hpp"

namespace sextab {

struct RenderOptions {
  std::string separator = ".";
  // Writes "0" between a digit 10..50 and a following 1..9, as the scribes
  // did; a true 0 digit in that spot is then written "00".
  bool zero_mark = false;
  bool json = false;
};

// Default mode reads every 0 as a digit. Scribal mode drops a bare "0"
// standing between a multiple of 10 and a digit 1..9; "00" is always a digit.
SexNumber parse_number(std::string_view text, bool scribal = false);
std::string format_number(const SexNumber& a, const RenderOptions& opts = {});

}  // namespace sextab
