#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sextab/sexnum.hpp"

namespace sextab {

enum class PolicyMode { Greedy, FixedNine, FixedTwelveThenNine, FixedTwelveThenThree };

struct DivisorPolicy {
  PolicyMode mode = PolicyMode::Greedy;
  // Consulted by Greedy only, most preferred first.
  std::vector<int> divisor_set;

  static DivisorPolicy greedy();
  static DivisorPolicy greedy(std::vector<int> divisors);
  static DivisorPolicy nine() { return {PolicyMode::FixedNine, {}}; }
  static DivisorPolicy twelve_then_nine() { return {PolicyMode::FixedTwelveThenNine, {}}; }
  static DivisorPolicy twelve_then_three() { return {PolicyMode::FixedTwelveThenThree, {}}; }
};

const std::vector<int>& default_divisor_set();

struct FactorRow {
  SexNumber value;
  std::optional<int> divisor;  // empty on the final row [1]
};

// Column i descends from the initial number to 1; column ii holds the
// reciprocals, accumulated from the bottom row upward.
struct FactorChain {
  std::vector<FactorRow> rows;
  std::vector<SexNumber> reciprocals;
};

bool divides(const SexNumber& a, int d);
int choose_divisor(const SexNumber& a, const DivisorPolicy& policy);
SexNumber divide_exact(const SexNumber& a, int d);
FactorChain factor_chain(const SexNumber& a, const DivisorPolicy& policy,
                         bool with_reciprocals);

struct PowerClaim {
  SexNumber base;
  unsigned exponent = 0;
};

struct VerifyStep {
  SexNumber quotient;
  SexNumber divisor;
};

struct VerifyResult {
  bool ok = false;
  std::vector<VerifyStep> chain;  // stops at the stalled step on failure
};

VerifyResult verify_power_product(const SexNumber& a,
                                  const std::vector<PowerClaim>& claims);

}  // namespace sextab
