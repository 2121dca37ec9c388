#include "pellcf/pell.hpp"

#include <stdexcept>

#include "pellcf/cf_engine.hpp"
#include "pellcf/errors.hpp"

namespace pellcf {

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& rhs) const {
  if (d != rhs.d) throw DomainError("multiplying surds over different radicands");
  return {a * rhs.a + b * rhs.b * d, a * rhs.b + rhs.a * b, d};
}

QuadraticSurd pow(const QuadraticSurd& base, std::uint64_t exponent) {
  QuadraticSurd result{1, 0, base.d};
  QuadraticSurd square = base;
  while (exponent != 0) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

PellSolution solve_fundamental(const BigInt& d) {
  const CFExpansion cf = expand_sqrt(d);
  const std::size_t j = cf.period_length();
  Convergent c = convergent_at(cf, j - 1);
  PellSolution s{std::move(c.num), std::move(c.den), j % 2 == 0 ? PellSign::Plus : PellSign::Minus,
                 d};
  if (s.x * s.x - d * s.y * s.y != to_int(s.sign)) {
    throw std::logic_error("convergent at j-1 does not solve the Pell equation for d=" +
                           to_decimal(d));
  }
  return s;
}

PellSolution solve_pell_plus(const BigInt& d) {
  PellSolution fund = solve_fundamental(d);
  if (fund.sign == PellSign::Plus) return fund;
  return power_solution(fund, 2);
}

std::optional<PellSolution> solve_pell_minus(const BigInt& d) {
  PellSolution fund = solve_fundamental(d);
  if (fund.sign == PellSign::Minus) return fund;
  return std::nullopt;
}

PellSolution power_solution(const PellSolution& fund, std::uint64_t n) {
  if (n == 0) throw DomainError("power_solution exponent must be at least 1");
  QuadraticSurd p = pow(QuadraticSurd{fund.x, fund.y, fund.d}, n);
  PellSign sign = (fund.sign == PellSign::Minus && n % 2 == 1) ? PellSign::Minus : PellSign::Plus;
  return {std::move(p.a), std::move(p.b), sign, fund.d};
}

std::optional<PellSign> is_solution(const BigInt& d, const BigInt& x, const BigInt& y) {
  const BigInt v = x * x - d * y * y;
  if (v == 1) return PellSign::Plus;
  if (v == -1) return PellSign::Minus;
  return std::nullopt;
}

}  // namespace pellcf
