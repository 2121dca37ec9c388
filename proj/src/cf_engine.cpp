#include "pellcf/cf_engine.hpp"

#include <cassert>
#include <stdexcept>

#include "pellcf/errors.hpp"

namespace pellcf {

IntegerSqrt integer_sqrt(const BigInt& n) {
  if (n < 0) throw DomainError("integer_sqrt of a negative number");
  if (n < 2) return {n, true};

  // 2^ceil(bits/2) >= sqrt(n); Newton from above decreases monotonically
  // until it reaches floor(sqrt(n)).
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x = 1;
  x <<= (bits + 1) / 2;
  for (;;) {
    BigInt next = (x + n / x) >> 1;
    if (next >= x) break;
    x = std::move(next);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return {x, x * x == n};
}

SurdExpansion::SurdExpansion(const BigInt& d) {
  if (d < 2) throw DomainError("d must be at least 2, got " + to_decimal(d));
  auto [root, exact] = integer_sqrt(d);
  if (exact) throw PerfectSquareError(d, root);
  root_ = std::move(root);
  state_ = SurdState{0, 1, d};
}

BigInt SurdExpansion::quotient() const {
  BigInt a = (state_.P + root_) / state_.Q;
  return a;
}

BigInt SurdExpansion::advance() {
  BigInt a = quotient();
  BigInt next_p = a * state_.Q - state_.P;
  BigInt numer = state_.d - next_p * next_p;
  assert(mpz_divisible_p(numer.get_mpz_t(), state_.Q.get_mpz_t()));
  BigInt next_q;
  mpz_divexact(next_q.get_mpz_t(), numer.get_mpz_t(), state_.Q.get_mpz_t());
  state_.P = std::move(next_p);
  state_.Q = std::move(next_q);
  ++index_;
  return a;
}

const BigInt& CFExpansion::quotient(std::size_t n) const {
  if (n == 0) return e;
  return period[(n - 1) % period.size()];
}

CFExpansion expand_sqrt(const BigInt& d) {
  SurdExpansion walk(d);
  CFExpansion cf{d, walk.integer_part(), {}};
  walk.advance();
  const SurdState first = walk.state();
  do {
    cf.period.push_back(walk.advance());
  } while (!(walk.state() == first));

  if (cf.period.back() != 2 * cf.e) {
    throw std::logic_error("period of sqrt(" + to_decimal(d) + ") does not end in 2e");
  }
  return cf;
}

std::vector<BigInt> quotient_prefix(const CFExpansion& cf, std::size_t n) {
  std::vector<BigInt> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(cf.quotient(i));
  return out;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n) {
  std::vector<Convergent> out;
  out.reserve(n + 3);
  out.push_back({0, 1, -2});
  out.push_back({1, 0, -1});
  for (std::size_t i = 0; i <= n; ++i) {
    const Convergent& prev = out[out.size() - 1];
    const Convergent& prev2 = out[out.size() - 2];
    const BigInt& a = cf.quotient(i);
    Convergent next{a * prev.num + prev2.num, a * prev.den + prev2.den,
                    static_cast<std::int64_t>(i)};
    out.push_back(std::move(next));
  }
  return out;
}

Convergent convergent_at(const CFExpansion& cf, std::size_t n) {
  BigInt num2 = 0, den2 = 1;  // index -2
  BigInt num1 = 1, den1 = 0;  // index -1
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt& a = cf.quotient(i);
    BigInt num = a * num1 + num2;
    BigInt den = a * den1 + den2;
    num2 = std::move(num1);
    den2 = std::move(den1);
    num1 = std::move(num);
    den1 = std::move(den);
  }
  return {std::move(num1), std::move(den1), static_cast<std::int64_t>(n)};
}

}  // namespace pellcf
