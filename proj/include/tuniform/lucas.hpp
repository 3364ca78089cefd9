#pragma once

// Lucas sequences U_n(P, Q), V_n(P, Q) over exact integers, with the
// special cases used for t-uniform discs: Fibonacci, its bisection, and
// partial sums for Q = 1.

#include <cstdint>
#include <optional>
#include <vector>

#include "tuniform/big_integer.hpp"
#include "tuniform/exact_ratio.hpp"

namespace tuniform {

using BigTerm = BigInt;

struct LucasParams {
  std::int64_t p = 0;
  std::int64_t q = 0;

  /// Discriminant P^2 - 4Q of x^2 - Px + Q.
  BigInt discriminant() const { return BigInt(p) * p - BigInt(4) * q; }

  friend bool operator==(const LucasParams&, const LucasParams&) = default;
};

enum class RootKind { distinct_real, double_root, complex_pair };

struct RootClass {
  RootKind kind = RootKind::distinct_real;
  /// Set only for a double root: P = 2S, Q = S^2.
  std::optional<std::int64_t> s;
};

RootClass classify_roots(const LucasParams& params);

BigTerm lucas_u(const LucasParams& params, std::int64_t n);
BigTerm lucas_v(const LucasParams& params, std::int64_t n);

/// U_0..U_{n_max}.
std::vector<BigTerm> lucas_u_terms(const LucasParams& params, std::int64_t n_max);
/// V_0..V_{n_max}.
std::vector<BigTerm> lucas_v_terms(const LucasParams& params, std::int64_t n_max);

/// n * S^(n-1); the double-root form of U_n(2S, S^2).
BigTerm degenerate_u(std::int64_t s, std::int64_t n);
/// 2 * S^n; the double-root form of V_n(2S, S^2).
BigTerm degenerate_v(std::int64_t s, std::int64_t n);

/// sum_{k=0..n} U_k(P, 1) by accumulation. Throws UnsupportedQ when Q != 1.
BigTerm lucas_u_sum(const LucasParams& params, std::int64_t n);

/// sum_{k=0..n} U_k(P, 1) / U_n(P, 1) for P > 2, n >= 1.
ExactRatio sum_over_last(const LucasParams& params, std::int64_t n);

/// (1 + sqrt((P+2)/(P-2))) / 2, the limit of sum_over_last as n grows. P > 2.
QuadraticValue limit_sum_over_last(std::int64_t p);

BigTerm fibonacci(std::int64_t n);
/// F_{2n} = U_n(3, 1).
BigTerm bisection(std::int64_t n);
/// F_{2n+1} - 1; throws MetricMismatch if it disagrees with sum_{k<=n} B_k.
BigTerm bisection_sum_identity(std::int64_t n);

}  // namespace tuniform
