#pragma once

#include <stdexcept>
#include <string>

namespace qscale {

/// Raised when an argument violates an operation's precondition or a type
/// invariant (negative action, N < 2 for a growth law, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qscale
