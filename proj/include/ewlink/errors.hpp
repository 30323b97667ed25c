#pragma once
#ifndef EWLINK_ERRORS_HPP
#define EWLINK_ERRORS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace ewlink {

// Physically meaningless input (non-positive power, range, RCS, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller asked for something the inputs cannot provide, e.g. an exact JSR
// without a noise floor, or a plot of zero rows.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

inline void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace detail
}  // namespace ewlink

#endif  // EWLINK_ERRORS_HPP
