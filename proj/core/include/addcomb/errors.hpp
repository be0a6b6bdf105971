#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addcomb {

/// A precondition of an operation was violated by its arguments.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric parameter fell outside its admissible interval.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A brute-force computation would exceed its configured budget.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t estimate = 0)
      : std::runtime_error(what), estimate_(estimate) {}
  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

/// No split A = A1 o P o A2 with A1 stable and A2 right-stable exists.
class NotDecomposable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// More than one stable split was found where exactly one was required.
class AmbiguousDecomposition : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Chain factorization could not reach a base of doubling at most 3k-4.
class FactorizationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked statement failed on a concrete input.
class CounterexampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace addcomb
