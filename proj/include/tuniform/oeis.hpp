#pragma once

// Offline prefixes of the OEIS entries that the t = 7..10 sequences match.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuniform/big_integer.hpp"
#include "tuniform/disc.hpp"

namespace tuniform {

enum class SeriesKind { length, sum, ring, area };
std::string_view to_string(SeriesKind kind);

enum class TermSource { printed_table, derived_recurrence };
std::string_view to_string(TermSource source);

struct OeisPrefix {
  std::string id;
  int t = 0;
  SeriesKind kind = SeriesKind::length;
  int first_n = 0;            // table index of terms[0]
  std::vector<BigInt> terms;  // values divided by t
  std::size_t table_terms = 0;  // terms[0..table_terms) are printed in the tables

  TermSource source(std::size_t i) const {
    return i < table_terms ? TermSource::printed_table : TermSource::derived_recurrence;
  }
};

/// All embedded prefixes, each extended past the printed terms up to
/// n = last_n with a(n) = (P+1)(a(n-1) - a(n-2)) + a(n-3), P = t - 4.
const std::vector<OeisPrefix>& embedded_prefixes();

std::optional<std::string> oeis_id(int t, SeriesKind kind);

struct OeisCheckEntry {
  std::string id;
  SeriesKind kind = SeriesKind::length;
  std::size_t checked = 0;
  std::size_t table_terms = 0;
  std::optional<int> first_mismatch_n;  // table index n of the first diverging term
  std::string expected;
  std::string computed;

  bool matches() const { return !first_mismatch_n.has_value(); }
};

/// Compares disc-measured (printed range) and formal (derived range)
/// sequences for t against the embedded prefixes. t in {6, ..., 10}.
std::vector<OeisCheckEntry> oeis_check(int t, const BuildLimits& limits = {});

nlohmann::json oeis_report_to_json(int t, const std::vector<OeisCheckEntry>& entries);

}  // namespace tuniform
