#pragma once

// Continued fraction expansion of sqrt(d) and its convergents.
//
// The tail of the expansion after n steps is the surd (P_n + sqrt(d)) / Q_n.
// Starting from P_0 = 0, Q_0 = 1 the quotients and states follow
//
//   a_n     = floor((P_n + e) / Q_n),        e = floor(sqrt(d))
//   P_{n+1} = a_n Q_n - P_n
//   Q_{n+1} = (d - P_{n+1}^2) / Q_n          (exact division)
//
// and the expansion is purely periodic from index 1 on, so the period ends at
// the first n > 1 whose state equals the state at index 1.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pellcf/bigint.hpp"

namespace pellcf {

struct IntegerSqrt {
  BigInt root;
  bool is_exact = false;
};

// floor(sqrt(n)) by Newton iteration, no floating point. Throws DomainError
// for n < 0.
IntegerSqrt integer_sqrt(const BigInt& n);

// (P + sqrt(d)) / Q.
struct SurdState {
  BigInt P;
  BigInt Q;
  BigInt d;

  bool operator==(const SurdState&) const = default;
};

// Walks the expansion of sqrt(d) one quotient at a time.
class SurdExpansion {
 public:
  // Throws DomainError for d < 2 and PerfectSquareError for squares.
  explicit SurdExpansion(const BigInt& d);

  const BigInt& integer_part() const noexcept { return root_; }
  const SurdState& state() const noexcept { return state_; }
  std::int64_t index() const noexcept { return index_; }

  // Quotient a_n of the current state.
  BigInt quotient() const;

  // Advances to the next state and returns the quotient consumed.
  BigInt advance();

 private:
  BigInt root_;
  SurdState state_;
  std::int64_t index_ = 0;
};

// sqrt(d) = [e; a_1, ..., a_j] with the block repeating; a_j = 2e.
struct CFExpansion {
  BigInt d;
  BigInt e;
  std::vector<BigInt> period;

  std::size_t period_length() const noexcept { return period.size(); }

  // a_n for any n >= 0, cycling the period.
  const BigInt& quotient(std::size_t n) const;
};

CFExpansion expand_sqrt(const BigInt& d);

// The first n quotients a_0, ..., a_{n-1} of the unrolled expansion.
std::vector<BigInt> quotient_prefix(const CFExpansion& cf, std::size_t n);

// num/den of [a_0; a_1, ..., a_index]. Seeds: index -2 is 0/1, index -1 is 1/0.
struct Convergent {
  BigInt num;
  BigInt den;
  std::int64_t index = 0;
};

// Convergents for indices -2 .. n (n + 3 entries).
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n);

// Only the convergent at index n, without materializing the list.
Convergent convergent_at(const CFExpansion& cf, std::size_t n);

}  // namespace pellcf
