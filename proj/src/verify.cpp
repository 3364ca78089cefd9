#include "tuniform/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tuniform/error.hpp"
#include "tuniform/lucas.hpp"

namespace tuniform {

std::string_view to_string(SeriesSource source) { return source == SeriesSource::disc ? "disc" : "formal"; }

namespace {

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::int64_t v) { return std::to_string(v); }

VerificationResult start(std::string claim, int t, int n_min, int n_max, SeriesSource source) {
  VerificationResult r;
  r.claim = std::move(claim);
  r.t = t;
  r.n_min = n_min;
  r.n_max = n_max;
  r.source = source;
  return r;
}

void fail(VerificationResult& r, std::map<std::string, std::string> witness) {
  r.status = Status::fails;
  r.witness = std::move(witness);
}

template <typename Body>
VerificationResult guarded(VerificationResult r, Body&& body) {
  try {
    body(r);
  } catch (const Error& e) {
    fail(r, {{"error", e.what()}});
  }
  return r;
}

VerificationResult series_result(std::string claim, const SphereSeries& s, int n_min) {
  return start(std::move(claim), s.t, n_min, s.n_max(), s.source);
}

void require_t(bool ok, int t, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_t, std::string(what) + ", got t = " + std::to_string(t));
}

std::vector<BigInt> scaled_lucas(int t, int n_max) {
  auto terms = lucas_u_terms({t - 4, 1}, n_max);
  for (auto& term : terms) term *= t;
  return terms;
}

}  // namespace

SphereSeries measured_series(const DiscMetrics& metrics) {
  SphereSeries s;
  s.t = metrics.t();
  s.source = SeriesSource::disc;
  BigInt running = 0;
  for (int n = 0; n <= metrics.radius(); ++n) {
    s.length.emplace_back(metrics.sphere_length(n));
    running += s.length.back();
    s.sum.push_back(running);
    s.ring.emplace_back(n == 0 ? 0 : metrics.ring_triangles(n));
    s.area.emplace_back(metrics.triangles_within(n));
    s.yz.push_back(n == 0 ? YzCounts{} : metrics.yz_structural(n));
  }
  return s;
}

SphereSeries formal_series(int t, int n_max) {
  SphereSeries s;
  s.t = t;
  s.source = SeriesSource::formal;
  s.length = scaled_lucas(t, n_max);
  BigInt running = 0;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    running += s.length[i];
    s.sum.push_back(running);
    s.ring.push_back(n == 0 ? BigInt(0) : BigInt(s.length[i - 1] + s.length[i]));
    s.area.push_back(2 * running - s.length[i]);
  }
  return s;
}

nlohmann::json to_json(const VerificationResult& r) {
  return {{"claim", r.claim},     {"t", r.t},
          {"n_min", r.n_min},     {"n_max", r.n_max},
          {"source", std::string(to_string(r.source))},
          {"status", r.holds() ? "holds" : "fails"},
          {"witness", r.witness}, {"details", r.details}};
}

nlohmann::json results_to_json(const std::vector<VerificationResult>& results) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : results) list.push_back(to_json(r));
  return {{"all_hold", all_hold(results)}, {"results", std::move(list)}};
}

bool all_hold(const std::vector<VerificationResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const VerificationResult& r) { return r.holds(); });
}

VerificationResult check_disc_invariants(const TriangulatedDisc& disc) {
  auto r = start("disc_invariants", disc.t(), 0, disc.radius(), SeriesSource::disc);
  return guarded(std::move(r), [&](VerificationResult& out) {
    const auto violations = validate_disc(disc);
    out.details["violations"] = std::to_string(violations.size());
    if (!violations.empty()) {
      fail(out, {{"invariant", std::string(to_string(violations.front().invariant))},
                 {"witness", violations.front().witness}});
    }
  });
}

VerificationResult check_pick(const TriangulatedDisc& disc) {
  auto r = start("pick_formula", disc.t(), 1, disc.radius(), SeriesSource::disc);
  return guarded(std::move(r), [&](VerificationResult& out) {
    for (int radius = 1; radius <= disc.radius(); ++radius) {
      try {
        const auto pick =
            radius == disc.radius() ? tuniform::pick_area(disc) : tuniform::pick_area(truncate(disc, radius));
        out.details["area_at_" + std::to_string(radius)] = std::to_string(pick.area);
      } catch (const Error& e) {
        fail(out, {{"n", std::to_string(radius)}, {"error", e.what()}});
        return;
      }
    }
  });
}

VerificationResult check_ring_area(const DiscMetrics& metrics) {
  auto r = start("ring_area", metrics.t(), 1, metrics.radius(), SeriesSource::disc);
  return guarded(std::move(r), [&](VerificationResult& out) {
    for (int n = 1; n <= metrics.radius(); ++n) {
      const auto filtered = metrics.ring_triangles(n);
      const auto walked = metrics.ring_walk(n);
      const auto lengths = metrics.sphere_length(n - 1) + metrics.sphere_length(n);
      if (filtered != walked || filtered != lengths) {
        fail(out, {{"n", std::to_string(n)},
                   {"triangle_filter", str(filtered)},
                   {"walk", str(walked)},
                   {"sum_of_lengths", str(lengths)}});
        return;
      }
    }
  });
}

VerificationResult check_yz_partition(const DiscMetrics& metrics) {
  auto r = start("yz_partition", metrics.t(), 1, metrics.radius(), SeriesSource::disc);
  return guarded(std::move(r), [&](VerificationResult& out) {
    const std::int64_t t = metrics.t();
    YzCounts previous;
    for (int n = 1; n <= metrics.radius(); ++n) {
      const auto structural = metrics.yz_partition(n);
      const auto tags = metrics.yz_from_tags(n);
      if (structural != tags) {
        fail(out, {{"n", std::to_string(n)},
                   {"structural", str(structural.y) + "/" + str(structural.z)},
                   {"tags", str(tags.y) + "/" + str(tags.z)}});
        return;
      }
      if (n >= 2) {
        const auto edges_below = metrics.sphere_length(n - 1);
        const auto predicted = (t - 5) * previous.y + (t - 4) * previous.z;
        if (structural.y != edges_below || metrics.vertex_count(n) != predicted) {
          fail(out, {{"n", std::to_string(n)},
                     {"y_count", str(structural.y)},
                     {"edges_on_previous_sphere", str(edges_below)},
                     {"vertex_count", str(metrics.vertex_count(n))},
                     {"predicted_vertex_count", str(predicted)}});
          return;
        }
      }
      previous = structural;
    }
  });
}

VerificationResult check_sphere_lucas(const SphereSeries& s) {
  return guarded(series_result("sphere_lucas", s, 0), [&](VerificationResult& out) {
    require_t(s.t >= 4, s.t, "sphere/Lucas check needs t >= 4");
    const auto expected = scaled_lucas(s.t, s.n_max());
    for (int n = 0; n <= s.n_max(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (s.length[i] != expected[i]) {
        fail(out, {{"n", std::to_string(n)}, {"length", str(s.length[i])}, {"t*U_n(t-4,1)", str(expected[i])}});
        return;
      }
    }
  });
}

VerificationResult check_sphere_lucas(int t, int n_max, const BuildLimits& limits) {
  const auto disc = build_disc(t, n_max, limits);
  const DiscMetrics metrics(disc);
  return check_sphere_lucas(measured_series(metrics));
}

VerificationResult check_area_formula(const SphereSeries& s) {
  return guarded(series_result("area_formula", s, 0), [&](VerificationResult& out) {
    BigInt rings = 0;
    for (int n = 0; n <= s.n_max(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (n >= 1) rings += s.ring[i];
      const BigInt formula = 2 * s.sum[i] - s.length[i];
      if (s.area[i] != formula || s.area[i] != rings) {
        fail(out, {{"n", std::to_string(n)},
                   {"area", str(s.area[i])},
                   {"2*sum-length", str(formula)},
                   {"sum_of_rings", str(rings)}});
        return;
      }
    }
  });
}

VerificationResult check_area_formula(int t, int n_max, const BuildLimits& limits) {
  const auto disc = build_disc(t, n_max, limits);
  const DiscMetrics metrics(disc);
  return check_area_formula(measured_series(metrics));
}

VerificationResult check_area_at_least_length(const SphereSeries& s) {
  return guarded(series_result("area_at_least_length", s, 1), [&](VerificationResult& out) {
    for (int n = 1; n <= s.n_max(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (s.area[i] < s.length[i]) {
        fail(out, {{"n", std::to_string(n)}, {"area", str(s.area[i])}, {"length", str(s.length[i])}});
        return;
      }
    }
  });
}

VerificationResult check_series_agreement(const SphereSeries& measured, const SphereSeries& formal) {
  auto r = start("disc_formal_agreement", measured.t, 0, std::min(measured.n_max(), formal.n_max()),
                 SeriesSource::disc);
  return guarded(std::move(r), [&](VerificationResult& out) {
    if (measured.t != formal.t) throw Error(ErrorCode::invalid_t, "series for different t");
    for (int n = 0; n <= out.n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const char* field = nullptr;
      if (measured.length[i] != formal.length[i]) field = "length";
      else if (measured.sum[i] != formal.sum[i]) field = "sum";
      else if (n >= 1 && measured.ring[i] != formal.ring[i]) field = "ring";
      else if (measured.area[i] != formal.area[i]) field = "area";
      if (field != nullptr) {
        fail(out, {{"n", std::to_string(n)}, {"field", field}});
        return;
      }
    }
  });
}

VerificationResult check_ratio_monotone_bounded(const SphereSeries& s) {
  return guarded(series_result("ratio_monotone_bounded", s, 1), [&](VerificationResult& out) {
    require_t(s.t >= 7, s.t, "the linear bound needs t >= 7");
    const BigInt t = s.t;
    for (int n = 1; n <= s.n_max(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      const BigInt& area = s.area[i];
      const BigInt& length = s.length[i];
      if (area < 0 || length <= 0) {
        fail(out, {{"n", std::to_string(n)}, {"reason", "non-positive length or negative area"}});
        return;
      }
      // A_n/|S_n| > A_{n-1}/|S_{n-1}| with positive denominators.
      if (n >= 2 && !(area * s.length[i - 1] > s.area[i - 1] * length)) {
        fail(out, {{"n", std::to_string(n)},
                   {"claim", "strictly increasing"},
                   {"A_n*|S_n-1|", str(BigInt(area * s.length[i - 1]))},
                   {"A_n-1*|S_n|", str(BigInt(s.area[i - 1] * length))}});
        return;
      }
      const BigInt lhs = (t - 6) * area * area;
      const BigInt rhs = (t - 2) * length * length;
      if (!(lhs < rhs)) {
        fail(out, {{"n", std::to_string(n)}, {"claim", "bounded"}, {"(t-6)A^2", str(lhs)}, {"(t-2)|S|^2", str(rhs)}});
        return;
      }
    }
  });
}

VerificationResult check_t6_quadratic(const SphereSeries& s) {
  return guarded(series_result("t6_quadratic", s, 1), [&](VerificationResult& out) {
    require_t(s.t == 6, s.t, "the quadratic identity is for t = 6");
    for (int n = 1; n <= s.n_max(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      if (6 * s.area[i] != s.length[i] * s.length[i]) {
        fail(out, {{"n", std::to_string(n)},
                   {"6*A_n", str(BigInt(6 * s.area[i]))},
                   {"|S_n|^2", str(BigInt(s.length[i] * s.length[i]))}});
        return;
      }
    }
  });
}

VerificationResult check_t7_fibonacci(const SphereSeries& s) {
  return guarded(series_result("t7_fibonacci", s, 0), [&](VerificationResult& out) {
    require_t(s.t == 7, s.t, "the Fibonacci suite is for t = 7");
    const auto fib = lucas_u_terms({1, -1}, 2 * static_cast<std::int64_t>(s.n_max()) + 1);
    for (int n = 0; n <= s.n_max(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      const BigInt& f_even = fib[2 * i];
      const BigInt& f_odd = fib[2 * i + 1];
      const BigInt length = 7 * f_even;
      const BigInt sum = 7 * (f_odd - 1);
      const BigInt area = 7 * (2 * f_odd - 2 - f_even);
      if (s.length[i] != length || s.sum[i] != sum || s.area[i] != area) {
        fail(out, {{"n", std::to_string(n)},
                   {"length", str(s.length[i])}, {"7*F_2n", str(length)},
                   {"sum", str(s.sum[i])}, {"7*(F_2n+1 - 1)", str(sum)},
                   {"area", str(s.area[i])}, {"7*(2F_2n+1 - 2 - F_2n)", str(area)}});
        return;
      }
      if (n >= 1 && i < s.yz.size()) {
        const BigInt y = 7 * fib[2 * i - 2];
        const BigInt z = 7 * fib[2 * i - 1];
        if (BigInt(s.yz[i].y) != y || BigInt(s.yz[i].z) != z) {
          fail(out, {{"n", std::to_string(n)},
                     {"|Y_n|", str(s.yz[i].y)}, {"7*F_2n-2", str(y)},
                     {"|Z_n|", str(s.yz[i].z)}, {"7*F_2n-1", str(z)}});
          return;
        }
      }
    }
    out.details["yz_interleave_checked"] = s.yz.empty() ? "no" : "yes";
  });
}

VerificationResult check_convergence(int t, int n_probe, const ExactRatio& tolerance, int precision) {
  auto r = start("convergence", t, n_probe, n_probe, SeriesSource::formal);
  return guarded(std::move(r), [&](VerificationResult& out) {
    require_t(t >= 7, t, "the ratio limit exists for t >= 7");
    if (tolerance.sign() <= 0) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
    if (n_probe < 1) throw Error(ErrorCode::invalid_argument, "n_probe must be >= 1");
    const int digits = std::max(precision, 50);
    const auto s = formal_series(t, n_probe);
    const auto i = static_cast<std::size_t>(n_probe);
    const ExactRatio ratio(s.area[i], s.length[i]);
    const auto limit = QuadraticValue::sqrt_of(ExactRatio(BigInt(t - 2), BigInt(t - 6)));

    const BigInt ratio_scaled = ratio.scaled_truncation(digits);
    const BigInt limit_scaled = limit.scaled_floor(digits);
    BigInt gap = ratio_scaled - limit_scaled;
    if (gap < 0) gap = -gap;
    // Each truncation is off by less than one unit in the last place.
    const ExactRatio bound(BigInt(gap + 1), pow10(digits));
    out.details["ratio"] = ratio.truncated_decimal(20);
    out.details["limit"] = limit.to_decimal(digits);
    out.details["error_bound"] = bound.truncated_decimal(digits);
    out.details["tolerance"] = tolerance.str();
    if (!(bound <= tolerance)) {
      fail(out, {{"ratio", ratio.truncated_decimal(digits)}, {"limit", limit.to_decimal(digits)}});
    }
  });
}

VerificationResult check_large_t_limit(int t, const ExactRatio& epsilon) {
  auto r = start("large_t_limit", t, 0, 0, SeriesSource::formal);
  return guarded(std::move(r), [&](VerificationResult& out) {
    require_t(t >= 7, t, "the bound exists for t >= 7");
    const auto bound = QuadraticValue::sqrt_of(ExactRatio(BigInt(t - 2), BigInt(t - 6)));
    out.details["bound"] = bound.to_decimal(20);
    if (!(ExactRatio(1) < bound) || !(ExactRatio(1) + epsilon > bound)) {
      fail(out, {{"bound", bound.to_decimal(30)}, {"epsilon", epsilon.str()}});
    }
  });
}

RatioCell RatioCell::of(const BigInt& area, const BigInt& length) {
  if (length == 0) return {area == 0 ? Kind::absent : Kind::infinite, std::nullopt};
  return {Kind::finite, ExactRatio(area, length)};
}

std::vector<FormalColumn> formal_sequences(int t, int n_max) {
  require_t(t == 4 || t == 5, t, "formal tables are for t in {4, 5}");
  const auto periodic = check_formal_periodicity(t, n_max);
  if (!periodic.holds()) {
    throw Error(ErrorCode::metric_mismatch, "formal sequences for t=" + std::to_string(t) + " are not periodic");
  }
  const auto s = formal_series(t, n_max);
  std::vector<FormalColumn> columns;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    FormalColumn c;
    c.n = n;
    c.length = s.length[i] / t;
    c.sum = s.sum[i] / t;
    if (n >= 1) c.ring = s.ring[i] / t;
    c.area = s.area[i] / t;
    if (n >= 1) c.ratio = RatioCell::of(s.area[i], s.length[i]);
    columns.push_back(std::move(c));
  }
  return columns;
}

VerificationResult check_formal_periodicity(int t, int n_max) {
  auto r = start("formal_periodicity", t, 0, n_max, SeriesSource::formal);
  return guarded(std::move(r), [&](VerificationResult& out) {
    require_t(t == 4 || t == 5, t, "periodicity applies to t in {4, 5}");
    const int period = t == 4 ? 4 : 6;
    out.details["period"] = std::to_string(period);
    const auto s = formal_series(t, n_max);
    for (int n = 0; n + period <= n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const auto j = i + static_cast<std::size_t>(period);
      const bool same = s.length[i] == s.length[j] && s.sum[i] == s.sum[j] && s.area[i] == s.area[j] &&
                        (n == 0 || s.ring[i] == s.ring[j]);
      if (!same) {
        fail(out, {{"n", std::to_string(n)}, {"length_n", str(s.length[i])}, {"length_n+p", str(s.length[j])}});
        return;
      }
    }
  });
}

std::optional<int> table_n_max(int t) {
  switch (t) {
    case 4: case 5: case 6: case 7: return 8;
    case 8: return 7;
    case 9: return 6;
    case 10: return 5;
    default: return std::nullopt;
  }
}

std::optional<int> degenerate_radius_cap(int t) {
  if (t == 4) return 1;
  if (t == 5) return 2;
  return std::nullopt;
}

std::vector<VerificationResult> verify_disc(const TriangulatedDisc& disc) {
  std::vector<VerificationResult> out;
  out.push_back(check_disc_invariants(disc));
  if (disc.radius() >= 1) out.push_back(check_pick(disc));

  std::optional<DiscMetrics> metrics;
  std::optional<SphereSeries> measured;
  out.push_back(guarded(start("disc_metrics", disc.t(), 0, disc.radius(), SeriesSource::disc),
                        [&](VerificationResult&) {
                          metrics.emplace(disc);
                          measured = measured_series(*metrics);
                        }));
  if (!measured) return out;

  if (disc.radius() >= 1) {
    out.push_back(check_ring_area(*metrics));
    out.push_back(check_yz_partition(*metrics));
  }
  out.push_back(check_sphere_lucas(*measured));
  out.push_back(check_area_formula(*measured));
  out.push_back(check_area_at_least_length(*measured));
  if (disc.t() >= 4) out.push_back(check_series_agreement(*measured, formal_series(disc.t(), disc.radius())));
  if (disc.t() == 6) out.push_back(check_t6_quadratic(*measured));
  if (disc.t() == 7) out.push_back(check_t7_fibonacci(*measured));
  if (disc.t() >= 7) out.push_back(check_ratio_monotone_bounded(*measured));
  return out;
}

std::vector<VerificationResult> verify_t(int t, std::optional<int> n_max, const BuildLimits& limits, int precision) {
  require_t(t >= 4, t, "t must be >= 4");
  const int requested = n_max.value_or(table_n_max(t).value_or(max_feasible_radius(t, limits, 8)));
  const int radius = std::min(requested, degenerate_radius_cap(t).value_or(requested));

  const auto disc = build_disc(t, radius, limits);
  auto out = verify_disc(disc);

  if (t == 4 || t == 5) out.push_back(check_formal_periodicity(t, std::max(requested, 8)));
  if (t == 6) out.push_back(check_t6_quadratic(formal_series(6, 200)));
  if (t == 7) out.push_back(check_t7_fibonacci(formal_series(7, 100)));
  if (t >= 7) {
    out.push_back(check_ratio_monotone_bounded(formal_series(t, 200)));
    out.push_back(check_convergence(t, 30, ExactRatio(1, 1'000'000), precision));
  }
  return out;
}

std::vector<VerificationResult> run_verification(const VerifyOptions& options) {
  const std::size_t tasks = options.ts.size();
  std::vector<std::vector<VerificationResult>> slots(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks; i = next++) {
      const int t = options.ts[i];
      try {
        slots[i] = verify_t(t, options.n_max, options.limits, options.precision);
      } catch (const Error& e) {
        auto r = start("verify_t", t, 0, options.n_max.value_or(0), SeriesSource::disc);
        fail(r, {{"error", e.what()}});
        slots[i] = {r};
      }
    }
  };
  const auto jobs = static_cast<std::size_t>(std::clamp(options.jobs, 1, 64));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::min(jobs, tasks); ++j) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();

  std::vector<VerificationResult> out;
  for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  if (std::any_of(options.ts.begin(), options.ts.end(), [](int t) { return t >= 7; })) {
    out.push_back(check_large_t_limit(1'000'000, ExactRatio(1, 100'000)));
  }
  return out;
}

}  // namespace tuniform
