#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sextab/fixture.hpp"
#include "sextab/sexnum.hpp"

namespace sextab {

struct TableRow {
  std::vector<SexNumber> cells;
  std::string label;
};

enum class BTail { PowersOfNine, PowersOfThree };

struct SquarePartial {
  std::pair<std::size_t, std::size_t> positions;  // digit indices i, j
  DigitSeq aligned;  // d_i * d_j shifted to its place, least significant aligned
};

struct SquareTrace {
  SexNumber operand;
  std::vector<SquarePartial> partials;
  SexNumber total;
};

// "9⁴⁶", "9¹¹·12³⁹" and the like.
std::string power_label(const std::vector<std::pair<int, long>>& factors);

std::vector<TableRow> text_a_table();
std::vector<TableRow> text_b_table(bool include_n40 = false,
                                   BTail tail = BTail::PowersOfNine);

// Index 1..100 in row order; cells [s, 1/s].
std::vector<TableRow> standard_reciprocal_table();
// Regulars in (1, 2) with min(len(s), len(1/s)) <= 5, strictly between the
// neighbouring anchors, fill each gap; anchors keep their index.
std::vector<TableRow> reconcile_standard_table(
    const std::map<int, SexNumber>& anchors, int size = 100);
std::map<int, SexNumber> standard_table_anchors(
    const std::vector<FixtureRecord>& fixture);

std::vector<TableRow> ob_reciprocal_table();
std::vector<TableRow> squares_table(bool include_extras = false);
std::vector<TableRow> combined_mult_table(const SexNumber& principal);
std::vector<TableRow> text_m_table(const SexNumber& base, long f_start,
                                   long f_step, long count);
const SexNumber& text_m_base();

SquareTrace digitwise_square_trace(const SexNumber& a);

}  // namespace sextab
