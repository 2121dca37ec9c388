#pragma once

#include <cstdint>
#include <optional>

#include "pellcf/bigint.hpp"

namespace pellcf {

enum class PellSign : int { Minus = -1, Plus = 1 };

inline PellSign operator*(PellSign a, PellSign b) {
  return a == b ? PellSign::Plus : PellSign::Minus;
}

inline int to_int(PellSign s) { return static_cast<int>(s); }

// x^2 - d y^2 = sign.
struct PellSolution {
  BigInt x;
  BigInt y;
  PellSign sign = PellSign::Plus;
  BigInt d;

  bool operator==(const PellSolution&) const = default;
};

// a + b sqrt(d), multiplied exactly.
struct QuadraticSurd {
  BigInt a;
  BigInt b;
  BigInt d;

  QuadraticSurd operator*(const QuadraticSurd& rhs) const;
  bool operator==(const QuadraticSurd&) const = default;

  // a^2 - d b^2
  BigInt norm() const { return a * a - d * b * b; }
};

QuadraticSurd pow(const QuadraticSurd& base, std::uint64_t exponent);

// Smallest positive solution of x^2 - d y^2 = (-1)^j, j the period of sqrt(d).
PellSolution solve_fundamental(const BigInt& d);

// Smallest positive solution of x^2 - d y^2 = 1.
PellSolution solve_pell_plus(const BigInt& d);

// Smallest positive solution of x^2 - d y^2 = -1, or nullopt when the period
// of sqrt(d) is even (no integral solutions exist).
std::optional<PellSolution> solve_pell_minus(const BigInt& d);

// (x + y sqrt(d))^n for n >= 1. Throws DomainError for n == 0.
PellSolution power_solution(const PellSolution& fund, std::uint64_t n);

std::optional<PellSign> is_solution(const BigInt& d, const BigInt& x, const BigInt& y);

}  // namespace pellcf
