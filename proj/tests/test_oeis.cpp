#include <doctest.h>

#include "oracles.hpp"
#include "tuniform/error.hpp"
#include "tuniform/oeis.hpp"

using namespace tuniform;

TEST_CASE("sixteen embedded identifiers") {
  const auto& all = embedded_prefixes();
  CHECK(all.size() == 16);
  std::set<std::string> ids;
  for (const auto& p : all) {
    ids.insert(p.id);
    CHECK(p.terms.size() > p.table_terms);
    CHECK(p.source(0) == TermSource::printed_table);
    CHECK(p.source(p.terms.size() - 1) == TermSource::derived_recurrence);
  }
  CHECK(ids.size() == 16);
  CHECK(oeis_id(7, SeriesKind::length) == "A001906");
  CHECK(oeis_id(10, SeriesKind::area) == "A001108");
  CHECK(oeis_id(8, SeriesKind::ring) == "A001834");
  CHECK(!oeis_id(6, SeriesKind::length).has_value());
}

TEST_CASE("derived terms match closed forms") {
  for (const auto& p : embedded_prefixes()) {
    if (p.kind != SeriesKind::length) continue;
    for (std::size_t i = 0; i < p.terms.size(); ++i) CHECK(p.terms[i] == oracle::matrix_u(p.t - 4, 1, i));
  }
  // A001906 is F(2n)
  for (const auto& p : embedded_prefixes()) {
    if (p.id != "A001906") continue;
    for (std::size_t i = 0; i < p.terms.size(); ++i) CHECK(p.terms[i] == oracle::fib_pair_walk(2 * i));
  }
}

TEST_CASE("cross-check holds for t = 6..10") {
  for (int t = 6; t <= 10; ++t) {
    const auto entries = oeis_check(t);
    CHECK(entries.size() == (t == 6 ? 0u : 4u));
    for (const auto& e : entries) {
      CHECK_MESSAGE(e.matches(), e.id);
      CHECK(e.checked >= e.table_terms);
    }
    CHECK(oeis_report_to_json(t, entries)["all_match"] == true);
  }
  CHECK_THROWS_AS(oeis_check(11), Error);
  CHECK_THROWS_AS(oeis_check(5), Error);
}
