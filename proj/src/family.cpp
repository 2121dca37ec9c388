#include "pellcf/family.hpp"

#include <stdexcept>
#include <string>

#include "pellcf/cf_engine.hpp"
#include "pellcf/errors.hpp"
#include "pellcf/kfib.hpp"

namespace pellcf {

namespace {

void require_params(std::int64_t j, const BigInt& k) {
  if (j < 2) throw DomainError("period j must be at least 2, got " + std::to_string(j));
  if (k < 1) throw DomainError("k must be at least 1, got " + to_decimal(k));
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  require(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, "inexact division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

FamilyEntry build_entry(std::int64_t j, const BigInt& k, const BigInt& ell, FamilyCase c,
                        const KSequence& f) {
  const std::int64_t m = j - 1;
  const BigInt& fm = f[m];
  const BigInt& fm1 = f[m - 1];
  const BigInt& fm2 = f[m - 2];

  FamilyEntry out;
  out.params = {j, k, ell};
  out.family_case = c;
  out.f_m = fm;
  out.f_m_minus_1 = fm1;

  switch (c) {
    case FamilyCase::Case1:
      out.e = exact_div(k, 2) + ell * fm;
      out.d = out.e * out.e + 2 * ell * fm1 + 1;
      break;
    case FamilyCase::Case2:
      require(is_even(fm), "Case 2 requires f_m even");
      out.e = exact_div(k, 2) + ell * exact_div(fm, 2);
      out.d = out.e * out.e + ell * fm1 + 1;
      break;
    case FamilyCase::Case3:
      out.e = exact_div(k + fm, 2) + ell * fm;
      out.d = out.e * out.e + (2 * ell + 1) * fm1 + 1;
      break;
  }

  // d - e^2 must equal (2 f_{m-1} e + f_{m-2}) / f_m exactly.
  require(exact_div(2 * fm1 * out.e + fm2, fm) == out.d - out.e * out.e,
          "d formula disagrees with the general expression");
  require(2 * out.e != k, "2e == k collapses the period");

  out.x = fm * out.e + fm1;
  out.y = fm;
  out.sign = j % 2 == 0 ? PellSign::Plus : PellSign::Minus;
  require(out.x * out.x - out.d * out.y * out.y == to_int(out.sign),
          "closed-form solution fails x^2 - d y^2 = (-1)^j");
  return out;
}

}  // namespace

bool exists_family(std::int64_t j, const BigInt& k) {
  require_params(j, k);
  return is_even(k) || (j - 1) % 3 != 2;
}

FamilyCase case_of(std::int64_t j, const BigInt& k) {
  if (!exists_family(j, k)) {
    throw NoFamilyError("no solutions: k odd and 3 | j (j=" + std::to_string(j) +
                        ", k=" + to_decimal(k) + ")");
  }
  if (!is_even(k)) return FamilyCase::Case3;
  return parity_of_f(k, j - 1) == Parity::Odd ? FamilyCase::Case1 : FamilyCase::Case2;
}

int min_ell(FamilyCase c) { return c == FamilyCase::Case3 ? 0 : 1; }

FamilyEntry make_entry(std::int64_t j, const BigInt& k, const BigInt& ell) {
  const FamilyCase c = case_of(j, k);
  if (ell < min_ell(c)) {
    throw EllOutOfRangeError("ell must be at least " + std::to_string(min_ell(c)) +
                             " for Case " + std::to_string(static_cast<int>(c)) + ", got " +
                             to_decimal(ell));
  }
  return build_entry(j, k, ell, c, KSequence(k, j - 1));
}

std::string_view describe(NoFamilyReason reason) {
  switch (reason) {
    case NoFamilyReason::KOddAndThreeDividesJ:
      return "k odd and 3 | j";
  }
  return "unknown";
}

FamilyListing enumerate_family(std::int64_t j, const BigInt& k, const BigInt& ell_max) {
  FamilyListing out;
  if (!exists_family(j, k)) {
    out.reason = NoFamilyReason::KOddAndThreeDividesJ;
    return out;
  }
  const FamilyCase c = case_of(j, k);
  const KSequence f(k, j - 1);
  for (BigInt ell = min_ell(c); ell <= ell_max; ++ell) {
    out.entries.push_back(build_entry(j, k, ell, c, f));
  }
  return out;
}

FamilyListing enumerate_family_up_to(std::int64_t j, const BigInt& k, const BigInt& d_max) {
  FamilyListing out;
  if (!exists_family(j, k)) {
    out.reason = NoFamilyReason::KOddAndThreeDividesJ;
    return out;
  }
  const FamilyCase c = case_of(j, k);
  const KSequence f(k, j - 1);
  for (BigInt ell = min_ell(c);; ++ell) {
    FamilyEntry entry = build_entry(j, k, ell, c, f);
    if (entry.d > d_max) break;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::optional<BigInt> solve_ell(std::int64_t j, const BigInt& k, const BigInt& e) {
  if (!exists_family(j, k)) return std::nullopt;
  const FamilyCase c = case_of(j, k);
  const KSequence f(k, j - 1);
  const BigInt& fm = f[j - 1];

  BigInt num, den;
  switch (c) {
    case FamilyCase::Case1:
      num = 2 * e - k;
      den = 2 * fm;
      break;
    case FamilyCase::Case2:
      num = 2 * e - k;
      den = fm;
      break;
    case FamilyCase::Case3:
      num = 2 * e - k - fm;
      den = 2 * fm;
      break;
  }
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) return std::nullopt;
  BigInt ell = num / den;
  if (ell < min_ell(c)) return std::nullopt;
  return ell;
}

PeriodOneEntry period_one_family(const BigInt& e) {
  if (e < 1) throw DomainError("e must be at least 1, got " + to_decimal(e));
  return {e, e * e + 1, e, 1, PellSign::Minus, 1};
}

std::optional<Membership> membership(const BigInt& d) {
  const CFExpansion cf = expand_sqrt(d);
  const std::size_t period = cf.period_length();
  if (period < 2) return std::nullopt;
  const BigInt& k = cf.period.front();
  for (std::size_t i = 1; i + 1 < period; ++i) {
    if (cf.period[i] != k) return std::nullopt;
  }
  const auto j = static_cast<std::int64_t>(period);
  require(exists_family(j, k), "uniform expansion outside the existence condition");
  std::optional<BigInt> ell = solve_ell(j, k, cf.e);
  require(ell.has_value(), "uniform expansion with no admissible ell");
  return Membership{j, k, *ell, cf.e, case_of(j, k)};
}

}  // namespace pellcf
