#include <doctest.h>

#include <set>

#include "pellcf/cf_engine.hpp"
#include "pellcf/errors.hpp"
#include "pellcf/family.hpp"
#include "pellcf/oracle.hpp"
#include "pellcf/pell.hpp"

using pellcf::BigInt;
using pellcf::PellSign;
namespace oracle = pellcf::oracle;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("brute_pell examples") {
  auto s = oracle::brute_pell(41, PellSign::Minus, 100);
  REQUIRE(s.has_value());
  CHECK(s->x == 32);
  CHECK(s->y == 5);

  CHECK_FALSE(oracle::brute_pell(3, PellSign::Minus, 10000).has_value());

  s = oracle::brute_pell(6, PellSign::Plus, 100);
  REQUIRE(s.has_value());
  CHECK(s->x == 5);
  CHECK(s->y == 2);

  CHECK_THROWS_AS(oracle::brute_pell(36, PellSign::Plus, 10), pellcf::PerfectSquareError);
}

TEST_CASE("brute_pell big-integer path") {
  // d beyond 64 bits: d = e^2 + 1 has x = e, y = 1 for sign -1.
  const BigInt e("100000000000000000000");
  const auto s = oracle::brute_pell(e * e + 1, PellSign::Minus, 3);
  REQUIRE(s.has_value());
  CHECK(s->x == e);
  CHECK(s->y == 1);
}

TEST_CASE("brute_cf_prefix examples") {
  CHECK(oracle::brute_cf_prefix(41, 7) == ints({6, 2, 2, 12, 2, 2, 12}));
  CHECK(oracle::brute_cf_prefix(2, 4) == ints({1, 2, 2, 2}));
  CHECK(oracle::brute_cf_prefix(7, 5) == ints({2, 1, 1, 1, 4}));
  CHECK_THROWS_AS(oracle::brute_cf_prefix(9, 3), pellcf::PerfectSquareError);
}

TEST_CASE("brute_cf_prefix agrees with expand_sqrt for d <= 10^4") {
  for (long dv = 2; dv <= 10000; ++dv) {
    const BigInt d = dv;
    if (mpz_perfect_square_p(d.get_mpz_t())) continue;
    CAPTURE(dv);
    CHECK(oracle::brute_cf_prefix(d, 50) ==
          pellcf::quotient_prefix(pellcf::expand_sqrt(d), 50));
  }
}

TEST_CASE("pattern_scan examples") {
  CHECK(oracle::pattern_scan(300, 3, 2) == ints({41, 130, 269}));
  CHECK(oracle::pattern_scan(10000, 3, 1).empty());
  // d = e^2 + 2e, e = 1..9
  std::vector<BigInt> expected;
  for (long e = 1; e <= 9; ++e) expected.emplace_back(e * e + 2 * e);
  CHECK(oracle::pattern_scan(100, 2, 1) == expected);
}

TEST_CASE("uniform_pattern reports exact periods only") {
  CHECK_FALSE(oracle::uniform_pattern(2, 10).has_value());  // period 1
  CHECK_FALSE(oracle::uniform_pattern(19, 10).has_value());
  auto p = oracle::uniform_pattern(35955, 14);
  REQUIRE(p.has_value());
  CHECK(p->j == 14);
  CHECK(p->k == 1);
  CHECK(p->e == 189);
  CHECK_FALSE(oracle::uniform_pattern(35955, 13).has_value());
}

TEST_CASE("pattern_scan equals the family enumeration (d <= 3000, j, k <= 8)") {
  for (std::int64_t j = 2; j <= 8; ++j) {
    for (long k = 1; k <= 8; ++k) {
      CAPTURE(j);
      CAPTURE(k);
      std::vector<BigInt> fam;
      for (const auto& en : pellcf::enumerate_family_up_to(j, k, 3000).entries) fam.push_back(en.d);
      CHECK(oracle::pattern_scan(3000, j, k) == fam);
    }
  }
}

TEST_CASE("brute_pell agrees with solve_fundamental (d <= 400)") {
  for (long dv = 2; dv <= 400; ++dv) {
    const BigInt d = dv;
    if (mpz_perfect_square_p(d.get_mpz_t())) continue;
    CAPTURE(dv);
    const auto fund = pellcf::solve_fundamental(d);
    const std::uint64_t y_max = 100000;
    auto brute = oracle::brute_pell(d, PellSign::Minus, y_max);
    if (!brute) brute = oracle::brute_pell(d, PellSign::Plus, y_max);
    if (brute) {
      CHECK(*brute == fund);
    } else {
      CHECK(fund.y > y_max);
    }
  }
}

TEST_CASE("brute_all_solutions matches a naive double loop") {
  for (std::uint64_t d : {2u, 3u, 5u, 7u, 10u, 13u}) {
    CAPTURE(d);
    std::vector<pellcf::PellSolution> naive;
    for (long long x = 1; x <= 2000; ++x) {
      for (long long y = 1; y <= 2000; ++y) {
        const long long v = x * x - static_cast<long long>(d) * y * y;
        if (v == 1 || v == -1) {
          naive.push_back({BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)), v == 1 ? PellSign::Plus : PellSign::Minus,
                           BigInt(static_cast<unsigned long>(d))});
        }
      }
    }
    CHECK(oracle::brute_all_solutions(d, 2000) == naive);
  }
  const auto two = oracle::brute_all_solutions(2, 1000);
  std::vector<long> xs;
  for (const auto& s : two) xs.push_back(s.x.get_si());
  CHECK(xs == std::vector<long>{1, 3, 7, 17, 41, 99, 239, 577});
  CHECK_THROWS_AS(oracle::brute_all_solutions(2, 2000000000ULL), pellcf::DomainError);
}
