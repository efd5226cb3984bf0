#pragma once

#include <stdexcept>
#include <string>

namespace regugame {

// Malformed input or parameters that violate a documented invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input for which the requested quantity does not exist
// (e.g. a deterrence penalty when audits never happen).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace regugame
