#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "tuniform/big_integer.hpp"

namespace tuniform {

/// Fraction of two big integers in lowest terms with a positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(BigInt value);  // NOLINT(google-explicit-constructor)
  ExactRatio(std::int64_t value) : ExactRatio(BigInt(value)) {}  // NOLINT
  ExactRatio(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  ExactRatio operator-() const;
  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

  /// "n/d", or "n" for integers.
  std::string str() const;

  /// Decimal truncated toward zero to exactly `digits` fractional digits.
  std::string truncated_decimal(int digits) const;

  /// Integer part of value * 10^digits, truncated toward zero.
  BigInt scaled_truncation(int digits) const;

 private:
  explicit ExactRatio(BigRational value) : value_(std::move(value)) {}

  BigRational value_{0};
};

/// Algebraic value rational + coefficient * sqrt(radicand), radicand >= 0.
class QuadraticValue {
 public:
  QuadraticValue(ExactRatio rational, ExactRatio coefficient, ExactRatio radicand);

  /// sqrt(radicand) alone.
  static QuadraticValue sqrt_of(const ExactRatio& radicand) { return {0, 1, radicand}; }

  const ExactRatio& rational() const { return rational_; }
  const ExactRatio& coefficient() const { return coefficient_; }
  const ExactRatio& radicand() const { return radicand_; }

  QuadraticValue operator-() const { return {-rational_, -coefficient_, radicand_}; }

  /// floor(value * 10^digits), exact.
  BigInt scaled_floor(int digits) const;

  /// Decimal truncated toward zero to `digits` fractional digits.
  std::string to_decimal(int digits = 50) const;

  /// Human-readable form such as "1/2 + 1/2*sqrt(5)".
  std::string describe() const;

 private:
  ExactRatio rational_;
  ExactRatio coefficient_;
  ExactRatio radicand_;
};

/// Exact three-way comparison of a rational against an algebraic value.
std::strong_ordering compare(const ExactRatio& x, const QuadraticValue& v);

inline bool operator<(const ExactRatio& x, const QuadraticValue& v) { return compare(x, v) < 0; }
inline bool operator>(const ExactRatio& x, const QuadraticValue& v) { return compare(x, v) > 0; }

BigInt pow10(int digits);

/// Parses "3", "-2/7", "0.01" or "1e-6" exactly. Throws InvalidArgument.
ExactRatio parse_ratio(std::string_view text);

}  // namespace tuniform
