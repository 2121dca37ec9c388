#pragma once

// The continuants f_n of a constant quotient k:
//
//   f_{-2} = 1, f_{-1} = 0, f_n = k f_{n-1} + f_{n-2}   (n >= 0)
//
// k = 1 gives the Fibonacci numbers, k = 2 the Pell numbers.

#include <cstdint>
#include <vector>

#include "pellcf/bigint.hpp"

namespace pellcf {

class KSequence {
 public:
  // f_{-2} .. f_last. Throws DomainError if k < 1 or last < -2.
  KSequence(const BigInt& k, std::int64_t last);

  const BigInt& k() const noexcept { return k_; }
  std::int64_t last_index() const noexcept {
    return static_cast<std::int64_t>(values_.size()) - 3;
  }

  // f_n for -2 <= n <= last_index().
  const BigInt& operator[](std::int64_t n) const;

  const std::vector<BigInt>& values() const noexcept { return values_; }

 private:
  BigInt k_;
  std::vector<BigInt> values_;
};

KSequence f_seq(const BigInt& k, std::int64_t n);

// f_{n-1}^2 + (-1)^n == f_n f_{n-2}, n >= 1.
bool cassini_check(const BigInt& k, std::int64_t n);

// (-1)^n f_{n-2} f_{n-1} == k (mod f_n), n >= 2.
bool congruence_check(const BigInt& k, std::int64_t n);

// f_n as a polynomial in k: coeffs[i] multiplies k^(n - 2i).
struct PolyCoeffs {
  std::int64_t n = 0;
  std::vector<BigInt> coeffs;

  BigInt evaluate(const BigInt& k) const;
};

PolyCoeffs f_poly_coeffs(std::int64_t n);

enum class Parity { Even, Odd };

// Parity of f_n from the parities of k and n alone.
Parity parity_of_f(const BigInt& k, std::int64_t n);

}  // namespace pellcf
