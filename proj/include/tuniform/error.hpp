#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tuniform {

enum class ErrorCode {
  invalid_argument,
  invalid_t,
  invalid_p,
  unsupported_q,
  division_by_zero,
  degenerate_radius,
  limit_exceeded,
  radius_out_of_range,
  disconnected,
  metric_mismatch,
  prefix_mismatch,
  invalid_format,
  io_error,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tuniform
