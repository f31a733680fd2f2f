#pragma once

#include <stdexcept>
#include <string>

namespace sextab {

enum class Errc {
  AllZero,
  DigitOutOfRange,
  NotRegular,
  NoDivisor,
  NotDivisible,
  BudgetExceeded,
  SyntaxError,
  RangeError,
  Ambiguous,
  NoMatch,
  Infeasible,
  FormatError,
  VersionMismatch,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  // detail carries the error's number: remainder digit, parse position,
  // match count or line number, depending on the code.
  Error(Errc code, const std::string& what, long detail = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  long detail() const noexcept { return detail_; }

 private:
  Errc code_;
  long detail_;
};

}  // namespace sextab
