#pragma once

// d whose square root expands as [e; k, ..., k, 2e] with period j >= 2
// (k repeated m = j - 1 times).
//
// Such d exist iff k is even or m mod 3 != 2. With f the continuants of k,
// the fundamental solution is x = f_m e + f_{m-1}, y = f_m, and every e, d
// comes from one of three cases:
//
//   Case1 (k even, f_m odd):  e = k/2 + l f_m,        d = e^2 + 2 l f_{m-1} + 1,     l >= 1
//   Case2 (k even, f_m even): e = k/2 + l f_m / 2,    d = e^2 + l f_{m-1} + 1,       l >= 1
//   Case3 (k odd):            e = (k + f_m)/2 + l f_m, d = e^2 + (2l + 1) f_{m-1} + 1, l >= 0

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/pell.hpp"

namespace pellcf {

enum class FamilyCase { Case1 = 1, Case2 = 2, Case3 = 3 };

struct FamilyParams {
  std::int64_t j = 2;
  BigInt k;
  BigInt ell;

  std::int64_t m() const noexcept { return j - 1; }
};

struct FamilyEntry {
  FamilyParams params;
  FamilyCase family_case = FamilyCase::Case1;
  BigInt e;
  BigInt d;
  BigInt x;
  BigInt y;
  PellSign sign = PellSign::Plus;
  BigInt f_m;
  BigInt f_m_minus_1;
};

// Throws DomainError if j < 2 or k < 1.
bool exists_family(std::int64_t j, const BigInt& k);

// Throws NoFamilyError when exists_family(j, k) is false.
FamilyCase case_of(std::int64_t j, const BigInt& k);

// Smallest admissible ell for the case: 1 for Case1/Case2, 0 for Case3.
int min_ell(FamilyCase c);

// Throws NoFamilyError, or EllOutOfRangeError below the case minimum.
FamilyEntry make_entry(std::int64_t j, const BigInt& k, const BigInt& ell);

enum class NoFamilyReason { KOddAndThreeDividesJ };

std::string_view describe(NoFamilyReason reason);

struct FamilyListing {
  std::vector<FamilyEntry> entries;
  std::optional<NoFamilyReason> reason;
};

// Entries for ell = min .. ell_max, increasing d. Empty with a reason when no
// family exists.
FamilyListing enumerate_family(std::int64_t j, const BigInt& k, const BigInt& ell_max);

// Every entry with d <= d_max.
FamilyListing enumerate_family_up_to(std::int64_t j, const BigInt& k, const BigInt& d_max);

// The ell that produces integer part e, if any.
std::optional<BigInt> solve_ell(std::int64_t j, const BigInt& k, const BigInt& e);

// d = e^2 + 1: sqrt(d) = [e; 2e], x = e, y = 1, sign -1.
struct PeriodOneEntry {
  BigInt e;
  BigInt d;
  BigInt x;
  BigInt y;
  PellSign sign = PellSign::Minus;
  std::int64_t j = 1;
};

PeriodOneEntry period_one_family(const BigInt& e);

struct Membership {
  std::int64_t j = 2;
  BigInt k;
  BigInt ell;
  BigInt e;
  FamilyCase family_case = FamilyCase::Case1;
};

// Expands sqrt(d) and reports the (j, k, ell, e) it belongs to, if the block
// before 2e is uniform and j >= 2.
std::optional<Membership> membership(const BigInt& d);

}  // namespace pellcf
