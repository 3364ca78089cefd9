#include "tuniform/lucas.hpp"

#include <string>

#include "tuniform/error.hpp"

namespace tuniform {

namespace {

void require_index(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative index n = " + std::to_string(n));
}

std::vector<BigTerm> recurrence_terms(const LucasParams& params, BigTerm first, BigTerm second,
                                      std::int64_t n_max) {
  require_index(n_max);
  std::vector<BigTerm> terms;
  terms.reserve(static_cast<std::size_t>(n_max) + 1);
  terms.push_back(std::move(first));
  if (n_max >= 1) terms.push_back(std::move(second));
  const BigInt p = params.p;
  const BigInt q = params.q;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    terms.push_back(p * terms[i - 1] - q * terms[i - 2]);
  }
  return terms;
}

void require_q_one(const LucasParams& params) {
  if (params.q != 1) {
    throw Error(ErrorCode::unsupported_q, "partial sums need Q = 1, got Q = " + std::to_string(params.q));
  }
}

}  // namespace

RootClass classify_roots(const LucasParams& params) {
  const BigInt d = params.discriminant();
  if (d > 0) return {RootKind::distinct_real, std::nullopt};
  if (d < 0) return {RootKind::complex_pair, std::nullopt};
  // D = 0 forces P even: P^2 = 4Q.
  if (params.p % 2 != 0) throw Error(ErrorCode::invalid_argument, "zero discriminant with odd P");
  return {RootKind::double_root, params.p / 2};
}

std::vector<BigTerm> lucas_u_terms(const LucasParams& params, std::int64_t n_max) {
  return recurrence_terms(params, 0, 1, n_max);
}

std::vector<BigTerm> lucas_v_terms(const LucasParams& params, std::int64_t n_max) {
  return recurrence_terms(params, 2, params.p, n_max);
}

BigTerm lucas_u(const LucasParams& params, std::int64_t n) {
  require_index(n);
  return lucas_u_terms(params, n).back();
}

BigTerm lucas_v(const LucasParams& params, std::int64_t n) {
  require_index(n);
  return lucas_v_terms(params, n).back();
}

BigTerm degenerate_u(std::int64_t s, std::int64_t n) {
  require_index(n);
  if (n == 0) return 0;
  return BigInt(n) * pow(BigInt(s), static_cast<std::uint32_t>(n - 1));
}

BigTerm degenerate_v(std::int64_t s, std::int64_t n) {
  require_index(n);
  return 2 * pow(BigInt(s), static_cast<std::uint32_t>(n));
}

BigTerm lucas_u_sum(const LucasParams& params, std::int64_t n) {
  require_q_one(params);
  BigTerm sum = 0;
  for (const auto& term : lucas_u_terms(params, n)) sum += term;
  return sum;
}

ExactRatio sum_over_last(const LucasParams& params, std::int64_t n) {
  require_q_one(params);
  if (params.p <= 2) throw Error(ErrorCode::invalid_p, "sum_over_last needs P > 2");
  if (n < 1) throw Error(ErrorCode::invalid_argument, "sum_over_last needs n >= 1");
  const auto terms = lucas_u_terms(params, n);
  BigTerm sum = 0;
  for (const auto& term : terms) sum += term;
  if (terms.back() == 0) throw Error(ErrorCode::division_by_zero, "U_n = 0");
  return ExactRatio(sum, terms.back());
}

QuadraticValue limit_sum_over_last(std::int64_t p) {
  if (p <= 2) throw Error(ErrorCode::invalid_p, "limit needs P > 2, got P = " + std::to_string(p));
  const ExactRatio half(1, 2);
  return {half, half, ExactRatio(BigInt(p + 2), BigInt(p - 2))};
}

BigTerm fibonacci(std::int64_t n) { return lucas_u({1, -1}, n); }

BigTerm bisection(std::int64_t n) { return lucas_u({3, 1}, n); }

BigTerm bisection_sum_identity(std::int64_t n) {
  require_index(n);
  const BigTerm closed = fibonacci(2 * n + 1) - 1;
  const BigTerm summed = lucas_u_sum({3, 1}, n);
  if (closed != summed) {
    throw Error(ErrorCode::metric_mismatch, "F_{2n+1} - 1 = " + closed.str() + " but sum B_k = " + summed.str());
  }
  return closed;
}

}  // namespace tuniform
