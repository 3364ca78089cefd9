#pragma once

// Checkers for the sphere/area identities of t-uniform discs. Every verdict
// is an exact integer comparison; inequalities are squared only after both
// sides are known to be non-negative.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuniform/big_integer.hpp"
#include "tuniform/disc.hpp"
#include "tuniform/exact_ratio.hpp"
#include "tuniform/sphere_metrics.hpp"

namespace tuniform {

enum class SeriesSource { disc, formal };
std::string_view to_string(SeriesSource source);

/// Per-radius sequences n = 0..n_max. ring[0] is unused.
struct SphereSeries {
  int t = 0;
  SeriesSource source = SeriesSource::formal;
  std::vector<BigInt> length;
  std::vector<BigInt> sum;
  std::vector<BigInt> ring;
  std::vector<BigInt> area;
  std::vector<YzCounts> yz;  // disc series only; yz[0] is {0, 0}

  int n_max() const { return static_cast<int>(length.size()) - 1; }
};

/// Raw counts off the disc (edges, triangle filters, BFS Y/Z split).
SphereSeries measured_series(const DiscMetrics& metrics);
/// t*U_n(t-4, 1), running sums, ring = |S_{n-1}| + |S_n|, area = 2*sum - |S_n|.
SphereSeries formal_series(int t, int n_max);

enum class Status { holds, fails };

struct VerificationResult {
  std::string claim;
  int t = 0;
  int n_min = 0;
  int n_max = 0;
  SeriesSource source = SeriesSource::formal;
  Status status = Status::holds;
  std::map<std::string, std::string> witness;  // first counterexample or failure detail
  std::map<std::string, std::string> details;  // informational values, present either way

  bool holds() const { return status == Status::holds; }
};

nlohmann::json to_json(const VerificationResult& result);
nlohmann::json results_to_json(const std::vector<VerificationResult>& results);
bool all_hold(const std::vector<VerificationResult>& results);

VerificationResult check_disc_invariants(const TriangulatedDisc& disc);
/// Pick's formula on every truncation radius 1..radius.
VerificationResult check_pick(const TriangulatedDisc& disc);
/// Triangle filter vs ring walk vs |S_{n-1}| + |S_n| for every ring.
VerificationResult check_ring_area(const DiscMetrics& metrics);
/// Tags vs BFS structure; |Y_n| = |S_{n-1}|; layer-size recurrence.
VerificationResult check_yz_partition(const DiscMetrics& metrics);

VerificationResult check_sphere_lucas(const SphereSeries& series);
VerificationResult check_sphere_lucas(int t, int n_max, const BuildLimits& limits = {});
VerificationResult check_area_formula(const SphereSeries& series);
VerificationResult check_area_formula(int t, int n_max, const BuildLimits& limits = {});
VerificationResult check_area_at_least_length(const SphereSeries& series);
VerificationResult check_series_agreement(const SphereSeries& measured, const SphereSeries& formal);

/// t >= 7: A_n/|S_n| strictly increasing and (t-6) A_n^2 < (t-2) |S_n|^2.
VerificationResult check_ratio_monotone_bounded(const SphereSeries& series);
/// t = 6: 6 A_n = |S_n|^2.
VerificationResult check_t6_quadratic(const SphereSeries& series);
/// t = 7: Fibonacci forms of lengths, sums, areas and the Y/Z interleave.
VerificationResult check_t7_fibonacci(const SphereSeries& series);

/// |A_n/|S_n| - sqrt((t-2)/(t-6))| < tolerance at n = n_probe, from formal
/// sums and a `precision`-digit evaluation of the square root.
VerificationResult check_convergence(int t, int n_probe, const ExactRatio& tolerance, int precision = 50);
/// sqrt((t-2)/(t-6)) < 1 + epsilon, exactly.
VerificationResult check_large_t_limit(int t, const ExactRatio& epsilon);

/// A ratio cell: "-" when A = |S| = 0 (or n = 0), infinity when only |S| = 0.
struct RatioCell {
  enum class Kind { absent, infinite, finite };
  Kind kind = Kind::absent;
  std::optional<ExactRatio> value;

  static RatioCell of(const BigInt& area, const BigInt& length);
};

struct FormalColumn {
  int n = 0;
  BigInt length;  // all values divided by t
  BigInt sum;
  std::optional<BigInt> ring;
  BigInt area;
  RatioCell ratio;
};

/// Formal recurrence rows for t in {4, 5} (no disc). Throws MetricMismatch
/// if the period (4 for t = 4, 6 for t = 5) fails.
std::vector<FormalColumn> formal_sequences(int t, int n_max);
VerificationResult check_formal_periodicity(int t, int n_max);

/// Printed table range: 8 for t in {4,...,7}, 7 for t = 8, 6 for t = 9, 5 for t = 10.
std::optional<int> table_n_max(int t);
/// Radius cap imposed by the closed-surface obstruction (1 for t = 4, 2 for t = 5).
std::optional<int> degenerate_radius_cap(int t);

/// Every applicable checker for one t: disc-based up to the feasible radius
/// and formal over extended ranges.
std::vector<VerificationResult> verify_t(int t, std::optional<int> n_max, const BuildLimits& limits = {},
                                         int precision = 50);
/// Disc-based checkers on an externally supplied disc.
std::vector<VerificationResult> verify_disc(const TriangulatedDisc& disc);

struct VerifyOptions {
  std::vector<int> ts{4, 5, 6, 7, 8, 9, 10};
  std::optional<int> n_max;
  BuildLimits limits;
  int jobs = 1;
  int precision = 50;
};

/// verify_t for every requested t, fanned out over `jobs` threads; results
/// keep the order of `ts`.
std::vector<VerificationResult> run_verification(const VerifyOptions& options);

}  // namespace tuniform
