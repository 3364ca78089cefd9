#pragma once

// Sequence tables (values divided by t) in markdown, CSV and JSON.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuniform/disc.hpp"
#include "tuniform/exact_ratio.hpp"
#include "tuniform/verify.hpp"

namespace tuniform {

struct DecimalShape {
  BigInt integer_part;     // of |value|
  int preperiod = 0;       // digits before the repetend
  bool terminates = false;
  bool single_digit_repetend = false;
};

DecimalShape decimal_shape(const ExactRatio& value);

/// Display form of a ratio cell. Integers print as integers; a one-digit
/// repetend prints as "1.(6)"; otherwise the value is truncated to the
/// fewest digits (at least two) that tell it apart from `previous`, and a
/// decimal that terminates within that many digits prints in full.
std::string format_ratio(const ExactRatio& value, const std::optional<ExactRatio>& previous);

std::string format_ratio_cell(const RatioCell& cell, const std::optional<ExactRatio>& previous);

struct TableColumn {
  int n = 0;
  bool formal = false;  // no disc has a sphere of this radius; recurrence only
  BigInt length;
  BigInt sum;
  std::optional<BigInt> ring;
  BigInt area;
  RatioCell ratio;
};

struct SequenceTable {
  int t = 0;
  std::vector<TableColumn> columns;
};

/// Measures a disc of radius n_max (t >= 6) or of the capped radius plus
/// formal columns beyond it (t in {4, 5}).
SequenceTable build_table(int t, int n_max, const BuildLimits& limits = {});

std::string render_markdown(const SequenceTable& table);
/// Undivided values, one row per n.
std::string render_csv(const SequenceTable& table, int precision = 12);
nlohmann::json render_json(const SequenceTable& table, int precision = 12);

/// Limit label of the ratio row, e.g. "→ √5" or "→ √(7/3)"; empty for t < 7.
std::string limit_label(int t);

}  // namespace tuniform
