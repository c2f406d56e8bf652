#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilpat {

enum class ErrorKind {
  non_prime_modulus,
  division_by_zero,
  mixed_rings,
  zero_polynomial,
  missing_assignment,
  resource_limit,
  zero_divisor_input,
  ragged_input,
  mixed_alphabet,
  bad_symbol,
  order_too_large,
  order_too_small,
  not_a_realization,
  wrong_field,
  search_budget_exceeded,
  parse_error,
  ring_too_large,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` names
/// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nilpat
