#include "tuniform/exact_ratio.hpp"

#include <utility>

#include "tuniform/error.hpp"

namespace tuniform {

namespace mp = boost::multiprecision;

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_t: return "InvalidT";
    case ErrorCode::invalid_p: return "InvalidP";
    case ErrorCode::unsupported_q: return "UnsupportedQ";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::degenerate_radius: return "DegenerateRadius";
    case ErrorCode::limit_exceeded: return "LimitExceeded";
    case ErrorCode::radius_out_of_range: return "RadiusOutOfRange";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::metric_mismatch: return "MetricMismatch";
    case ErrorCode::prefix_mismatch: return "PrefixMismatch";
    case ErrorCode::invalid_format: return "InvalidFormat";
    case ErrorCode::io_error: return "IOError";
  }
  return "Unknown";
}

BigInt pow10(int digits) {
  if (digits < 0) throw Error(ErrorCode::invalid_argument, "negative digit count");
  return mp::pow(BigInt(10), static_cast<unsigned>(digits));
}

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::string format_scaled(BigInt scaled, int digits, bool negative) {
  if (scaled < 0) scaled = -scaled;
  std::string body = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

}  // namespace

ExactRatio::ExactRatio(BigInt value) : value_(std::move(value)) {}

ExactRatio::ExactRatio(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  // boost::rational rejects negative unbounded denominators; move the sign up.
  value_ = denominator < 0 ? BigRational(-numerator, -denominator) : BigRational(numerator, denominator);
}

BigInt ExactRatio::numerator() const { return mp::numerator(value_); }
BigInt ExactRatio::denominator() const { return mp::denominator(value_); }

ExactRatio ExactRatio::operator-() const { return ExactRatio(BigRational(-value_)); }

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
  return ExactRatio(BigRational(a.value_ + b.value_));
}
ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) {
  return ExactRatio(BigRational(a.value_ - b.value_));
}
ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
  return ExactRatio(BigRational(a.value_ * b.value_));
}
ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
  if (b.value_ == 0) throw Error(ErrorCode::division_by_zero, "division by zero ratio");
  return ExactRatio(BigRational(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
  int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactRatio::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

BigInt ExactRatio::scaled_truncation(int digits) const {
  return BigInt(numerator() * pow10(digits)) / denominator();
}

std::string ExactRatio::truncated_decimal(int digits) const {
  return format_scaled(scaled_truncation(digits), digits, sign() < 0);
}

QuadraticValue::QuadraticValue(ExactRatio rational, ExactRatio coefficient, ExactRatio radicand)
    : rational_(std::move(rational)),
      coefficient_(std::move(coefficient)),
      radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) throw Error(ErrorCode::invalid_argument, "negative radicand");
}

ExactRatio parse_ratio(std::string_view text) {
  const std::string input(text);
  auto bad = [&]() { return Error(ErrorCode::invalid_argument, "cannot parse rational '" + input + "'"); };
  auto parse_int = [&](std::string_view digits) {
    if (digits.empty()) throw bad();
    std::size_t start = (digits.front() == '-' || digits.front() == '+') ? 1 : 0;
    if (start == digits.size()) throw bad();
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw bad();
    }
    return BigInt(std::string(digits.front() == '+' ? digits.substr(1) : digits));
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return ExactRatio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  int exponent = 0;
  std::string_view mantissa = text;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt parsed = parse_int(text.substr(e + 1));
    if (parsed > 1000 || parsed < -1000) throw bad();
    exponent = parsed.convert_to<int>();
    mantissa = text.substr(0, e);
  }
  std::string digits(mantissa);
  if (const auto dot = digits.find('.'); dot != std::string::npos) {
    exponent -= static_cast<int>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  const BigInt value = parse_int(digits);
  if (exponent >= 0) return ExactRatio(BigInt(value * pow10(exponent)));
  return ExactRatio(value, pow10(-exponent));
}

std::strong_ordering compare(const ExactRatio& x, const QuadraticValue& v) {
  // x <=> a + b*sqrt(r)  is  y <=> z  with y = x - a, z = b*sqrt(r).
  const ExactRatio y = x - v.rational();
  const int z_sign = v.radicand().sign() == 0 ? 0 : v.coefficient().sign();
  const int y_sign = y.sign();
  if (y_sign != z_sign || y_sign == 0) return y_sign <=> z_sign;
  const ExactRatio y_sq = y * y;
  const ExactRatio z_sq = v.coefficient() * v.coefficient() * v.radicand();
  // Same nonzero sign: magnitudes decide, reversed when both are negative.
  return y_sign > 0 ? (y_sq <=> z_sq) : (z_sq <=> y_sq);
}

BigInt QuadraticValue::scaled_floor(int digits) const {
  const BigInt scale = pow10(digits);
  const ExactRatio a = rational_ * ExactRatio(scale);
  const ExactRatio y = coefficient_ * coefficient_ * radicand_ * ExactRatio(scale * scale);
  const int s = radicand_.sign() == 0 ? 0 : coefficient_.sign();
  BigInt k = floor_div(a.numerator(), a.denominator());
  if (s != 0) {
    const BigInt root = isqrt(BigInt(y.numerator() / y.denominator()));
    k += s > 0 ? root : BigInt(-root);
  }
  // The estimate is within a couple of units; settle it exactly.
  while (compare(ExactRatio(k, scale), *this) > 0) --k;
  while (compare(ExactRatio(BigInt(k + 1), scale), *this) <= 0) ++k;
  return k;
}

std::string QuadraticValue::to_decimal(int digits) const {
  if (compare(ExactRatio(0), *this) <= 0) return format_scaled(scaled_floor(digits), digits, false);
  return format_scaled((-*this).scaled_floor(digits), digits, true);
}

std::string QuadraticValue::describe() const {
  std::string out;
  if (rational_.sign() != 0) out = rational_.str();
  if (coefficient_.sign() != 0 && radicand_.sign() != 0) {
    if (!out.empty()) out += coefficient_.sign() > 0 ? " + " : " - ";
    else if (coefficient_.sign() < 0) out += "-";
    const ExactRatio magnitude = coefficient_.sign() < 0 ? -coefficient_ : coefficient_;
    if (magnitude != ExactRatio(1)) out += magnitude.str() + "*";
    out += "sqrt(" + radicand_.str() + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace tuniform
