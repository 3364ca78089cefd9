// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "oracles.hpp"
#include "tuniform/error.hpp"
#include "tuniform/lucas.hpp"
#include "tuniform/oeis.hpp"
#include "tuniform/sphere_metrics.hpp"
#include "tuniform/tables.hpp"
#include "tuniform/verify.hpp"

using namespace tuniform;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 10) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string str(const BigInt& v) { return v.str(); }

// Discs of criteria 2-5: every radius that fits in two million vertices,
// and at least radius 8 up to t = 10.
struct BigDisc {
  int t;
  TriangulatedDisc disc;
};

constexpr std::size_t vertex_budget = 2'000'000;

std::vector<BigDisc>& big_discs() {
  static std::vector<BigDisc> discs = [] {
    std::vector<BigDisc> out;
    for (int t = 6; t <= 12; ++t) {
      BuildLimits limits;
      limits.max_vertices = vertex_budget;
      limits.max_radius = 1000;
      int radius = max_feasible_radius(t, limits, 1000);
      if (t <= 10 && radius < 8) {
        radius = 8;
        limits.max_vertices = 3'000'000;
      }
      out.push_back({t, build_disc(t, radius, limits)});
    }
    return out;
  }();
  return discs;
}

void criterion_1(Criterion& c) {
  for (int t = 4; t <= 10; ++t) {
    const std::string golden = slurp(std::string(GOLDEN_DIR) + "/table_t" + std::to_string(t) + ".md");
    std::ostringstream out, err;
    const int status = cli::run({"tuniform", "table", "--t", std::to_string(t)}, out, err);
    c.expect(!golden.empty(), "missing golden for t=" + std::to_string(t));
    c.expect(status == 0 && out.str() == golden, "table output differs from golden for t=" + std::to_string(t));
  }
}

void criterion_2(Criterion& c) {
  for (const auto& [t, disc] : big_discs()) {
    const DiscMetrics m(disc);
    c.expect(disc.vertices().size() <= vertex_budget || (t == 10 && disc.radius() == 8),
             "vertex budget for t=" + std::to_string(t));
    c.expect(t > 10 || disc.radius() >= 8, "radius below 8 for t=" + std::to_string(t));
    for (int n = 0; n <= disc.radius(); ++n) {
      const BigInt expected = t * lucas_u({t - 4, 1}, n);
      c.expect(BigInt(m.sphere_length(n)) == expected,
               "t=" + std::to_string(t) + " n=" + std::to_string(n) + ": " + std::to_string(m.sphere_length(n)) +
                   " vs " + str(expected));
      c.expect(expected == t * oracle::matrix_u(t - 4, 1, n), "recurrence vs matrix power");
    }
  }
}

void criterion_3(Criterion& c) {
  for (const auto& [t, disc] : big_discs()) {
    const DiscMetrics m(disc);
    const auto formal = formal_series(t, disc.radius());
    for (int n = 0; n <= disc.radius(); ++n) {
      const auto tag = "t=" + std::to_string(t) + " n=" + std::to_string(n);
      if (n >= 1) {
        const auto filter = m.ring_triangles(n);
        const auto walk = m.ring_walk(n);
        c.expect(filter == walk, tag + ": ring filter " + std::to_string(filter) + " vs walk " + std::to_string(walk));
        c.expect(BigInt(filter) == formal.length[n - 1] + formal.length[n], tag + ": ring area");
      }
      c.expect(BigInt(m.triangles_within(n)) == 2 * formal.sum[n] - formal.length[n], tag + ": cumulative area");
    }
    c.expect(check_ring_area(m).holds(), "ring area checker t=" + std::to_string(t));
    c.expect(check_area_formula(measured_series(m)).holds(), "area checker t=" + std::to_string(t));
  }
}

void criterion_4(Criterion& c) {
  for (const auto& [t, disc] : big_discs()) {
    const DiscMetrics m(disc);
    // counts of the radius-n truncation, read from the full disc
    std::int64_t within = 1;
    for (int n = 1; n <= disc.radius(); ++n) {
      const std::int64_t boundary = m.vertex_count(n);
      const std::int64_t interior = within;
      within += boundary;
      c.expect(m.triangles_within(n) == 2 * interior + boundary - 2,
               "pick from counts t=" + std::to_string(t) + " n=" + std::to_string(n));
    }
    // explicit truncations where the total work stays linear in the disc
    const int explicit_radius = t == 6 ? 64 : disc.radius();
    const auto base = t == 6 ? truncate(disc, explicit_radius) : disc;
    c.expect(check_pick(base).holds(), "pick checker on truncations t=" + std::to_string(t));
  }
  for (int t : {4, 5}) c.expect(check_pick(build_disc(t, *degenerate_radius_cap(t))).holds(), "pick degenerate t");
}

void criterion_5(Criterion& c) {
  for (int t = 7; t <= 12; ++t) {
    const auto s = formal_series(t, 200);
    c.expect(check_ratio_monotone_bounded(s).holds(), "formal ratio checker t=" + std::to_string(t));
    // independent restatement of both inequalities with cross multiplication
    for (int n = 1; n <= 200; ++n) {
      c.expect((t - 6) * s.area[n] * s.area[n] < (t - 2) * s.length[n] * s.length[n], "bound n=" + std::to_string(n));
      if (n >= 2) c.expect(s.area[n - 1] * s.length[n] < s.area[n] * s.length[n - 1], "monotone n=" + std::to_string(n));
    }
  }
  for (const auto& [t, disc] : big_discs()) {
    if (t < 7) continue;
    c.expect(check_ratio_monotone_bounded(measured_series(DiscMetrics(disc))).holds(),
             "disc ratio checker t=" + std::to_string(t));
  }
}

void criterion_6(Criterion& c) {
  const auto& disc = big_discs().front().disc;
  const auto measured = measured_series(DiscMetrics(truncate(disc, 20)));
  c.expect(measured.n_max() == 20, "t=6 disc radius 20");
  c.expect(check_t6_quadratic(measured).holds(), "disc 6A = |S|^2");
  c.expect(check_t6_quadratic(formal_series(6, 200)).holds(), "formal 6A = |S|^2");
  const auto s = formal_series(6, 200);
  for (int n = 0; n <= 200; ++n) c.expect(6 * s.area[n] == s.length[n] * s.length[n], "n=" + std::to_string(n));
}

void criterion_7(Criterion& c) {
  const TriangulatedDisc* disc7 = nullptr;
  for (const auto& d : big_discs()) {
    if (d.t == 7) disc7 = &d.disc;
  }
  const DiscMetrics m(*disc7);
  const auto measured = measured_series(m);
  c.expect(check_t7_fibonacci(measured).holds(), "disc Fibonacci checker");
  c.expect(check_t7_fibonacci(formal_series(7, 100)).holds(), "formal Fibonacci checker");
  for (int n = 1; n <= disc7->radius(); ++n) {
    const auto yz = m.yz_partition(n);
    c.expect(BigInt(m.sphere_length(n)) == 7 * oracle::fib_pair_walk(2 * n), "S_n n=" + std::to_string(n));
    c.expect(BigInt(m.sum_lengths(n)) == 7 * (oracle::fib_pair_walk(2 * n + 1) - 1), "sum n=" + std::to_string(n));
    c.expect(BigInt(yz.y) == 7 * oracle::fib_pair_walk(2 * n - 2), "Y_n n=" + std::to_string(n));
    c.expect(BigInt(yz.z) == 7 * oracle::fib_pair_walk(2 * n - 1), "Z_n n=" + std::to_string(n));
  }
  const auto s = formal_series(7, 100);
  for (int n = 0; n <= 100; ++n) {
    c.expect(s.length[n] == 7 * oracle::fib_pair_walk(2 * n), "formal S_n");
    c.expect(s.sum[n] == 7 * (oracle::fib_pair_walk(2 * n + 1) - 1), "formal sum");
  }
}

void criterion_8(Criterion& c) {
  const ExactRatio tolerance = parse_ratio("1e-6");
  const std::vector<std::pair<int, std::string>> printed{{7, "2.234"}, {8, "1.731"}, {9, "1.527"}, {10, "1.413"}};
  for (const auto& [t, cell] : printed) {
    c.expect(check_convergence(t, 30, tolerance, 50).holds(), "convergence t=" + std::to_string(t));
    // second route: compare the ratio directly against limit -/+ tolerance
    const auto s = formal_series(t, 30);
    const ExactRatio ratio(s.area[30], s.length[30]);
    const ExactRatio r(BigInt(t - 2), BigInt(t - 6));
    c.expect(ratio < QuadraticValue(0, 1, r), "ratio below limit t=" + std::to_string(t));
    c.expect(ratio + tolerance > QuadraticValue(0, 1, r), "within tolerance t=" + std::to_string(t));
    // last printed cell and its limit label
    const int n = *table_n_max(t);
    const auto last = build_table(t, n).columns.back();
    const auto prev = build_table(t, n).columns[n - 1];
    c.expect(format_ratio(*last.ratio.value, prev.ratio.value) == cell, "printed cell t=" + std::to_string(t));
    c.expect(last.ratio.value->truncated_decimal(3) == cell, "truncation t=" + std::to_string(t));
    c.expect(*last.ratio.value < QuadraticValue(0, 1, r), "printed cell below limit");
    c.expect(QuadraticValue(0, 1, r).to_decimal(50).size() == 52, "50-digit limit");
  }
  c.expect(limit_label(7) == "→ √5" && limit_label(8) == "→ √3" && limit_label(9) == "→ √(7/3)" &&
               limit_label(10) == "→ √2",
           "limit labels");
}

void criterion_9(Criterion& c) {
  auto degenerate = [](int t, int r) {
    try {
      build_disc(t, r);
    } catch (const Error& e) {
      return e.code() == ErrorCode::degenerate_radius;
    }
    return false;
  };
  c.expect(degenerate(4, 2) && degenerate(4, 5), "t=4 beyond radius 1");
  c.expect(degenerate(5, 3) && degenerate(5, 6), "t=5 beyond radius 2");
  c.expect(validate_disc(build_disc(4, 1)).empty() && validate_disc(build_disc(5, 2)).empty(), "caps build");
  c.expect(check_formal_periodicity(4, 200).holds(), "period 4");
  c.expect(check_formal_periodicity(5, 200).holds(), "period 6");
  const auto s4 = formal_series(4, 12);
  const auto s5 = formal_series(5, 12);
  for (int n = 0; n + 4 <= 12; ++n) c.expect(s4.length[n] == s4.length[n + 4] && s4.area[n] == s4.area[n + 4], "t=4 p4");
  for (int n = 0; n + 6 <= 12; ++n) c.expect(s5.length[n] == s5.length[n + 6] && s5.area[n] == s5.area[n + 6], "t=5 p6");

  using Row = std::vector<long long>;
  struct Expected {
    int t;
    Row length, sum, ring, area;
    std::vector<std::string> ratio;
  };
  const std::vector<Expected> tables{
      {4, {0, 1, 0, -1, 0, 1, 0, -1, 0}, {0, 1, 1, 0, 0, 1, 1, 0, 0}, {0, 1, 1, -1, -1, 1, 1, -1, -1},
       {0, 1, 2, 1, 0, 1, 2, 1, 0}, {"-", "1", "∞", "-1", "-", "1", "∞", "-1", "-"}},
      {5, {0, 1, 1, 0, -1, -1, 0, 1, 1}, {0, 1, 2, 2, 1, 0, 0, 1, 2}, {0, 1, 2, 1, -1, -2, -1, 1, 2},
       {0, 1, 3, 4, 3, 1, 0, 1, 3}, {"-", "1", "3", "∞", "-3", "-1", "-", "1", "3"}},
  };
  for (const auto& e : tables) {
    const auto cols = formal_sequences(e.t, 8);
    for (int n = 0; n <= 8; ++n) {
      const auto& f = cols[n];
      const auto tag = "t=" + std::to_string(e.t) + " n=" + std::to_string(n);
      c.expect(f.length == e.length[n] && f.sum == e.sum[n] && f.area == e.area[n], tag);
      c.expect(n == 0 ? !f.ring.has_value() : *f.ring == e.ring[n], tag + " ring");
      c.expect(format_ratio_cell(f.ratio, std::nullopt) == e.ratio[n], tag + " ratio");
    }
  }
}

void criterion_10(Criterion& c) {
  std::size_t ids = 0;
  for (int t = 7; t <= 10; ++t) {
    for (const auto& e : oeis_check(t)) {
      ++ids;
      c.expect(e.matches(), e.id + " diverges");
      c.expect(e.checked >= e.table_terms, e.id + " short");
    }
  }
  std::size_t printed_terms = 0;
  for (const auto& p : embedded_prefixes()) printed_terms += p.table_terms;
  c.expect(ids == 16, "16 identifiers");
  c.expect(printed_terms == 4 * (9 + 8 + 7 + 6) - 4, "printed term count");
}

void criterion_11(Criterion& c) {
  const std::vector<LucasParams> pairs{{1, -1}, {3, 1}, {2, 1}, {4, 1}, {0, 1}, {1, 1}};
  for (const auto& pq : pairs) {
    const auto us = lucas_u_terms(pq, 100);
    const auto vs = lucas_v_terms(pq, 100);
    for (int n = 0; n <= 100; ++n) {
      c.expect(vs[n] * vs[n] - pq.discriminant() * us[n] * us[n] == 4 * pow(BigInt(pq.q), n),
               "P=" + std::to_string(pq.p) + " Q=" + std::to_string(pq.q) + " n=" + std::to_string(n));
    }
  }
  for (int s = -5; s <= 5; ++s) {
    for (int n = 0; n <= 50; ++n) {
      const BigInt expected = n == 0 ? BigInt(0) : BigInt(n) * pow(BigInt(s), n - 1);
      c.expect(lucas_u({2 * s, s * s}, n) == expected, "S=" + std::to_string(s) + " n=" + std::to_string(n));
      c.expect(degenerate_u(s, n) == expected, "closed form S=" + std::to_string(s));
    }
  }
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  struct Entry {
    int id;
    const char* name;
    double budget;  // seconds, 0 for none
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries{
      {1, "golden tables", 5.0, criterion_1},
      {2, "sphere length equals t*U_n(t-4,1) on discs", 30.0, criterion_2},
      {3, "ring area and cumulative area on discs", 0.0, criterion_3},
      {4, "Pick formula on every truncation", 0.0, criterion_4},
      {5, "ratio increasing and bounded for t = 7..12", 0.0, criterion_5},
      {6, "6 A_n = |S_n|^2 for t = 6", 0.0, criterion_6},
      {7, "Fibonacci identities for t = 7", 0.0, criterion_7},
      {8, "convergence at n = 30 and printed decimals", 1.0, criterion_8},
      {9, "degenerate t = 4, 5", 0.0, criterion_9},
      {10, "OEIS cross-check", 0.0, criterion_10},
      {11, "Lucas closed-form identities", 0.0, criterion_11},
  };

  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = Clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    double elapsed = seconds_since(start);
    // criterion 2 owns the disc construction shared with 3-5
    if (e.budget > 0 && elapsed >= e.budget) {
      c.failures.push_back("took " + std::to_string(elapsed) + " s, budget " + std::to_string(e.budget) + " s");
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("[%s] %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", e.id, e.name, elapsed);
    for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
  }

  const double total = seconds_since(suite_start);
  const bool in_budget = total < 60.0;
  failed += !in_budget;
  std::printf("[%s] 12 acceptance suite wall-clock under 60 s (%.2f s)\n", in_budget ? "PASS" : "FAIL", total);
  return failed == 0 ? 0 : 1;
}
