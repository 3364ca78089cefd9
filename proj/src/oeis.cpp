#include "tuniform/oeis.hpp"

#include "tuniform/error.hpp"
#include "tuniform/sphere_metrics.hpp"
#include "tuniform/verify.hpp"

namespace tuniform {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::length: return "length";
    case SeriesKind::sum: return "sum";
    case SeriesKind::ring: return "ring";
    case SeriesKind::area: return "area";
  }
  return "unknown";
}

std::string_view to_string(TermSource source) {
  return source == TermSource::printed_table ? "table" : "derived_recurrence";
}

namespace {

constexpr int last_n = 15;

OeisPrefix make(std::string id, int t, SeriesKind kind, std::vector<long long> printed) {
  OeisPrefix p;
  p.id = std::move(id);
  p.t = t;
  p.kind = kind;
  p.first_n = kind == SeriesKind::ring ? 1 : 0;
  for (long long v : printed) p.terms.emplace_back(v);
  p.table_terms = p.terms.size();
  const BigInt k = t - 3;
  while (p.first_n + static_cast<int>(p.terms.size()) <= last_n) {
    const std::size_t m = p.terms.size();
    p.terms.push_back(k * (p.terms[m - 1] - p.terms[m - 2]) + p.terms[m - 3]);
  }
  return p;
}

std::vector<OeisPrefix> build_prefixes() {
  using K = SeriesKind;
  return {
      make("A001906", 7, K::length, {0, 1, 3, 8, 21, 55, 144, 377, 987}),
      make("A027941", 7, K::sum, {0, 1, 4, 12, 33, 88, 232, 609, 1596}),
      make("A002878", 7, K::ring, {1, 4, 11, 29, 76, 199, 521, 1364}),
      make("A004146", 7, K::area, {0, 1, 5, 16, 45, 121, 320, 841, 2205}),
      make("A001353", 8, K::length, {0, 1, 4, 15, 56, 209, 780, 2911}),
      make("A061278", 8, K::sum, {0, 1, 5, 20, 76, 285, 1065, 3976}),
      make("A001834", 8, K::ring, {1, 5, 19, 71, 265, 989, 3691}),
      make("A092184", 8, K::area, {0, 1, 6, 25, 96, 361, 1350, 5041}),
      make("A004254", 9, K::length, {0, 1, 5, 24, 115, 551, 2640}),
      make("A089817", 9, K::sum, {0, 1, 6, 30, 145, 696, 3336}),
      make("A030221", 9, K::ring, {1, 6, 29, 139, 666, 3191}),
      make("A054493", 9, K::area, {0, 1, 7, 36, 175, 841, 4032}),
      make("A001109", 10, K::length, {0, 1, 6, 35, 204, 1189}),
      make("A053142", 10, K::sum, {0, 1, 7, 42, 246, 1435}),
      make("A002315", 10, K::ring, {1, 7, 41, 239, 1393}),
      make("A001108", 10, K::area, {0, 1, 8, 49, 288, 1681}),
  };
}

const std::vector<BigInt>& pick(const SphereSeries& s, SeriesKind kind) {
  switch (kind) {
    case SeriesKind::length: return s.length;
    case SeriesKind::sum: return s.sum;
    case SeriesKind::ring: return s.ring;
    case SeriesKind::area: return s.area;
  }
  return s.length;
}

}  // namespace

const std::vector<OeisPrefix>& embedded_prefixes() {
  static const std::vector<OeisPrefix> prefixes = build_prefixes();
  return prefixes;
}

std::optional<std::string> oeis_id(int t, SeriesKind kind) {
  for (const auto& p : embedded_prefixes()) {
    if (p.t == t && p.kind == kind) return p.id;
  }
  return std::nullopt;
}

std::vector<OeisCheckEntry> oeis_check(int t, const BuildLimits& limits) {
  const auto printed = table_n_max(t);
  if (t < 6 || !printed) {
    throw Error(ErrorCode::invalid_t, "no sequence table for t = " + std::to_string(t));
  }
  const auto disc = build_disc(t, *printed, limits);
  const DiscMetrics metrics(disc);
  const SphereSeries measured = measured_series(metrics);
  const SphereSeries formal = formal_series(t, last_n);

  std::vector<OeisCheckEntry> entries;
  for (const auto& prefix : embedded_prefixes()) {
    if (prefix.t != t) continue;
    OeisCheckEntry entry;
    entry.id = prefix.id;
    entry.kind = prefix.kind;
    entry.table_terms = prefix.table_terms;
    const auto& disc_values = pick(measured, prefix.kind);
    const auto& formal_values = pick(formal, prefix.kind);
    for (std::size_t i = 0; i < prefix.terms.size(); ++i) {
      const int n = prefix.first_n + static_cast<int>(i);
      const BigInt& raw = n <= *printed ? disc_values[n] : formal_values[n];
      ++entry.checked;
      if (raw % t != 0 || raw / t != prefix.terms[i]) {
        entry.first_mismatch_n = n;
        entry.expected = prefix.terms[i].str();
        entry.computed = raw % t == 0 ? BigInt(raw / t).str() : raw.str() + "/" + std::to_string(t);
        break;
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

nlohmann::json oeis_report_to_json(int t, const std::vector<OeisCheckEntry>& entries) {
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (const auto& e : entries) {
    nlohmann::json row{{"id", e.id},
                       {"kind", to_string(e.kind)},
                       {"checked", e.checked},
                       {"table_terms", e.table_terms},
                       {"matches", e.matches()}};
    if (!e.matches()) {
      row["first_mismatch_n"] = *e.first_mismatch_n;
      row["expected"] = e.expected;
      row["computed"] = e.computed;
    }
    all = all && e.matches();
    rows.push_back(std::move(row));
  }
  return {{"t", t}, {"all_match", all}, {"entries", std::move(rows)}};
}

}  // namespace tuniform
