#pragma once

#include <stdexcept>

namespace udgpath {

/// Malformed or out-of-range user input (bad coordinates, unparseable files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or internal postcondition did not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The brute-force oracle declined an instance above its size caps.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace udgpath
