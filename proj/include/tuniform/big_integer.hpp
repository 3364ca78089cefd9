#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tuniform {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt pow(const BigInt& base, std::uint32_t exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// floor(sqrt(value)) for value >= 0.
inline BigInt isqrt(const BigInt& value) { return boost::multiprecision::sqrt(value); }

}  // namespace tuniform
