#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sbk {

enum class ErrorKind {
  BadInput,
  OrderTooLarge,
  NoIdentity,
  NoInverse,
  NotLatinSquare,
  NotAssociative,
  NotPrime,
  IdentityMismatch,
  LeftDistributivityFails,
  NotAnIdeal,
  PrimeDoesNotDivideOrder,
  UnsupportedOrder,
  ConstructionFailed,
  BraidRelationFails,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `witness()` holds the first
/// violating element tuple when the check that failed has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

}  // namespace sbk
