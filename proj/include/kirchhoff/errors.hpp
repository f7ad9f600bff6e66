#pragma once

#include <stdexcept>
#include <string>

namespace kirchhoff {

enum class ErrorCode {
  invalid_config,
  domain_error,
  domain_mismatch,
  out_of_range,
  non_monotone,
  negative_mass,
  order_violated,
  boundary_violated,
  not_verified,
  no_convergence,
  no_witness,
  no_positive_solution,
  no_epsilon,
  lambda_too_large,
  lambda_below_threshold,
};

const char* error_code_name(ErrorCode code);

/// Library-wide error carrying a machine-readable code; the CLI maps codes
/// to exit statuses and a one-line JSON diagnostic on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kirchhoff
