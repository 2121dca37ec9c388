#pragma once

#include <stdexcept>
#include <string>

#include "pellcf/bigint.hpp"

namespace pellcf {

// Argument outside an operation's domain (d < 2, j < 2, k < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PerfectSquareError : public DomainError {
 public:
  PerfectSquareError(const BigInt& n, const BigInt& root)
      : DomainError(to_decimal(n) + " is a perfect square (" + to_decimal(root) + "^2)"),
        value_(n),
        root_(root) {}

  const BigInt& value() const noexcept { return value_; }
  const BigInt& root() const noexcept { return root_; }

 private:
  BigInt value_;
  BigInt root_;
};

// No d has the uniform pattern for the requested (j, k).
class NoFamilyError : public DomainError {
 public:
  using DomainError::DomainError;
};

class EllOutOfRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace pellcf
