#include "pellcf/kfib.hpp"

#include <string>

#include "pellcf/errors.hpp"

namespace pellcf {

KSequence::KSequence(const BigInt& k, std::int64_t last) : k_(k) {
  if (k < 1) throw DomainError("k must be at least 1, got " + to_decimal(k));
  if (last < -2) throw DomainError("sequence index must be at least -2");
  values_.reserve(static_cast<std::size_t>(last + 3));
  values_.emplace_back(1);
  if (last >= -1) values_.emplace_back(0);
  for (std::int64_t n = 0; n <= last; ++n) {
    const std::size_t i = values_.size();
    values_.push_back(k_ * values_[i - 1] + values_[i - 2]);
  }
}

const BigInt& KSequence::operator[](std::int64_t n) const {
  if (n < -2 || n > last_index()) {
    throw DomainError("f_" + std::to_string(n) + " outside the computed range");
  }
  return values_[static_cast<std::size_t>(n + 2)];
}

KSequence f_seq(const BigInt& k, std::int64_t n) { return KSequence(k, n); }

bool cassini_check(const BigInt& k, std::int64_t n) {
  if (n < 1) throw DomainError("Cassini identity needs n >= 1");
  const KSequence f(k, n);
  const BigInt lhs = f[n - 1] * f[n - 1] + (n % 2 == 0 ? 1 : -1);
  return lhs == f[n] * f[n - 2];
}

bool congruence_check(const BigInt& k, std::int64_t n) {
  if (n < 2) throw DomainError("the f_n congruence needs n >= 2");
  const KSequence f(k, n);
  BigInt lhs = f[n - 2] * f[n - 1];
  if (n % 2 != 0) lhs = -lhs;
  BigInt diff = lhs - k;
  return mpz_divisible_p(diff.get_mpz_t(), f[n].get_mpz_t()) != 0;
}

BigInt PolyCoeffs::evaluate(const BigInt& k) const {
  // Horner in k^2, finishing with k^(n mod 2).
  BigInt k2 = k * k;
  BigInt acc = 0;
  for (const BigInt& c : coeffs) acc = acc * k2 + c;
  if (n % 2 != 0) acc *= k;
  return acc;
}

namespace {

BigInt binomial(std::uint64_t top, std::uint64_t bottom) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), top, bottom);
  return out;
}

}  // namespace

PolyCoeffs f_poly_coeffs(std::int64_t n) {
  if (n < 0) throw DomainError("polynomial coefficients need n >= 0");
  PolyCoeffs out{n, {}};
  out.coeffs.reserve(static_cast<std::size_t>(n / 2 + 1));
  out.coeffs.emplace_back(1);  // leading term k^n
  // a_{n-2i} = C(1,0) + sum_{s=1}^{n-2i} C(s+i-1, s)
  for (std::int64_t i = 1; 2 * i <= n; ++i) {
    BigInt a = 1;
    for (std::int64_t s = 1; s <= n - 2 * i; ++s) {
      a += binomial(static_cast<std::uint64_t>(s + i - 1), static_cast<std::uint64_t>(s));
    }
    out.coeffs.push_back(std::move(a));
  }
  return out;
}

Parity parity_of_f(const BigInt& k, std::int64_t n) {
  if (k < 1) throw DomainError("k must be at least 1, got " + to_decimal(k));
  if (n < -2) throw DomainError("sequence index must be at least -2");
  if (is_even(k)) return n % 2 == 0 ? Parity::Odd : Parity::Even;
  // odd k: f_{-2}, f_{-1}, f_0, ... runs odd, even, odd, odd, even, odd, ...
  return (n + 2) % 3 == 1 ? Parity::Even : Parity::Odd;
}

}  // namespace pellcf
