#include <doctest.h>

#include "pellcf/cf_engine.hpp"
#include "pellcf/errors.hpp"
#include "pellcf/family.hpp"
#include "pellcf/oracle.hpp"
#include "pellcf/pell.hpp"

using pellcf::BigInt;
using pellcf::FamilyCase;

TEST_CASE("exists_family examples") {
  CHECK_FALSE(pellcf::exists_family(3, 1));
  CHECK(pellcf::exists_family(3, 2));
  CHECK_FALSE(pellcf::exists_family(6, 3));
  CHECK(pellcf::exists_family(2, 1));
  CHECK(pellcf::exists_family(4, 1));
  CHECK_THROWS_AS(pellcf::exists_family(1, 2), pellcf::DomainError);
  CHECK_THROWS_AS(pellcf::exists_family(3, 0), pellcf::DomainError);

  // k odd and 3 | j is the only obstruction.
  for (std::int64_t j = 2; j <= 30; ++j) {
    for (long k = 1; k <= 15; ++k) {
      CHECK(pellcf::exists_family(j, k) == (k % 2 == 0 || j % 3 != 0));
    }
  }
}

TEST_CASE("case_of examples") {
  CHECK(pellcf::case_of(3, 2) == FamilyCase::Case1);
  CHECK(pellcf::case_of(4, 2) == FamilyCase::Case2);
  CHECK(pellcf::case_of(4, 1) == FamilyCase::Case3);
  CHECK_THROWS_AS(pellcf::case_of(3, 1), pellcf::NoFamilyError);
}

TEST_CASE("make_entry examples") {
  struct Row {
    std::int64_t j;
    long k, ell, e, d, x, y;
  };
  const Row rows[] = {
      {3, 2, 1, 6, 41, 32, 5},
      {4, 1, 0, 2, 7, 8, 3},
      {5, 2, 1, 30, 925, 882, 29},
      {7, 2, 1, 170, 29041, 28800, 169},
      {14, 1, 0, 189, 35955, 71486, 377},
  };
  for (const auto& r : rows) {
    CAPTURE(r.j);
    CAPTURE(r.k);
    const auto en = pellcf::make_entry(r.j, r.k, r.ell);
    CHECK(en.e == r.e);
    CHECK(en.d == r.d);
    CHECK(en.x == r.x);
    CHECK(en.y == r.y);
    CHECK(pellcf::to_int(en.sign) == (r.j % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("make_entry errors") {
  CHECK_THROWS_AS(pellcf::make_entry(3, 1, 1), pellcf::NoFamilyError);
  CHECK_THROWS_AS(pellcf::make_entry(3, 2, 0), pellcf::EllOutOfRangeError);
  CHECK_THROWS_AS(pellcf::make_entry(4, 2, 0), pellcf::EllOutOfRangeError);
  CHECK_THROWS_AS(pellcf::make_entry(4, 1, -1), pellcf::EllOutOfRangeError);
  CHECK_NOTHROW(pellcf::make_entry(4, 1, 0));
  CHECK_THROWS_AS(pellcf::make_entry(1, 1, 0), pellcf::DomainError);
}

TEST_CASE("below the ell minimum the period would collapse") {
  // Cases 1 and 2 at ell = 0 give e = k/2, i.e. 2e = k.
  for (long k = 2; k <= 20; k += 2) {
    for (std::int64_t j = 2; j <= 9; ++j) CHECK(pellcf::min_ell(pellcf::case_of(j, k)) == 1);
  }
  CHECK(pellcf::min_ell(FamilyCase::Case3) == 0);
}

TEST_CASE("enumerate_family examples") {
  auto none = pellcf::enumerate_family(3, 1, 10);
  CHECK(none.entries.empty());
  REQUIRE(none.reason.has_value());
  CHECK(pellcf::describe(*none.reason) == "k odd and 3 | j");

  auto j3 = pellcf::enumerate_family(3, 2, 3);
  CHECK_FALSE(j3.reason.has_value());
  REQUIRE(j3.entries.size() == 3);
  CHECK(j3.entries[0].d == 41);
  CHECK(j3.entries[1].d == 130);
  CHECK(j3.entries[2].d == 269);

  auto j2 = pellcf::enumerate_family(2, 2, 2);
  REQUIRE(j2.entries.size() == 2);
  CHECK(j2.entries[0].e == 2);
  CHECK(j2.entries[0].d == 6);
  CHECK(j2.entries[1].e == 3);
  CHECK(j2.entries[1].d == 12);

  CHECK(pellcf::enumerate_family(3, 2, 0).entries.empty());
  CHECK_THROWS_AS(pellcf::enumerate_family(1, 2, 3), pellcf::DomainError);
}

TEST_CASE("enumerate_family_up_to stops at d_max and is increasing") {
  auto listing = pellcf::enumerate_family_up_to(4, 1, 136);
  REQUIRE(listing.entries.size() == 4);
  CHECK(listing.entries.back().d == 136);
  for (std::int64_t j = 2; j <= 9; ++j) {
    for (long k = 1; k <= 9; ++k) {
      auto l = pellcf::enumerate_family_up_to(j, k, 100000);
      for (std::size_t i = 1; i < l.entries.size(); ++i) {
        CHECK(l.entries[i].d > l.entries[i - 1].d);
      }
    }
  }
}

TEST_CASE("period two reproduces d = e^2 + 2e/k with (ke+1, k)") {
  for (long k = 1; k <= 12; ++k) {
    CAPTURE(k);
    const auto listing = pellcf::enumerate_family_up_to(2, k, 500000);
    std::vector<BigInt> expected_e;
    for (long e = 1; e * e <= 500000; ++e) {
      if ((2 * e) % k == 0 && 2 * e != k && e * e + 2 * e / k <= 500000) expected_e.emplace_back(e);
    }
    REQUIRE(listing.entries.size() == expected_e.size());
    for (std::size_t i = 0; i < expected_e.size(); ++i) {
      const auto& en = listing.entries[i];
      const BigInt& e = expected_e[i];
      CHECK(en.e == e);
      CHECK(en.d == e * e + 2 * e / k);
      CHECK(en.x == k * e + 1);
      CHECK(en.y == k);
      CHECK(en.sign == pellcf::PellSign::Plus);
    }
  }
}

TEST_CASE("period_one_family examples") {
  auto p = pellcf::period_one_family(1);
  CHECK(p.d == 2);
  CHECK(p.x == 1);
  CHECK(p.y == 1);
  p = pellcf::period_one_family(2);
  CHECK(p.d == 5);
  CHECK(p.x == 2);
  p = pellcf::period_one_family(3);
  CHECK(p.d == 10);
  CHECK(p.x * p.x - p.d * p.y * p.y == -1);
  CHECK(p.j == 1);
  CHECK(p.sign == pellcf::PellSign::Minus);
  CHECK_THROWS_AS(pellcf::period_one_family(0), pellcf::DomainError);

  for (long e = 1; e <= 200; ++e) {
    const auto q = pellcf::period_one_family(e);
    const auto cf = pellcf::expand_sqrt(q.d);
    CHECK(cf.period == std::vector<BigInt>{2 * e});
    CHECK(pellcf::solve_fundamental(q.d) == pellcf::PellSolution{q.x, q.y, q.sign, q.d});
  }
}

TEST_CASE("membership examples") {
  auto m = pellcf::membership(41);
  REQUIRE(m.has_value());
  CHECK(m->j == 3);
  CHECK(m->k == 2);
  CHECK(m->ell == 1);
  CHECK(m->e == 6);

  m = pellcf::membership(13);
  REQUIRE(m.has_value());
  CHECK(m->j == 5);
  CHECK(m->k == 1);
  CHECK(m->ell == 0);
  CHECK(m->e == 3);

  // The oracle expansion of sqrt(19) is [4; 2,1,3,1,2,8]: not uniform.
  std::vector<BigInt> cf19 = pellcf::oracle::brute_cf_prefix(19, 7);
  CHECK(cf19 == std::vector<BigInt>{4, 2, 1, 3, 1, 2, 8});
  CHECK_FALSE(pellcf::membership(19).has_value());

  CHECK_FALSE(pellcf::membership(2).has_value());  // period 1
  CHECK_THROWS_AS(pellcf::membership(49), pellcf::PerfectSquareError);
}

TEST_CASE("membership inverts make_entry") {
  for (std::int64_t j = 2; j <= 10; ++j) {
    for (long k = 1; k <= 10; ++k) {
      auto listing = pellcf::enumerate_family(j, k, 6);
      for (const auto& en : listing.entries) {
        const auto m = pellcf::membership(en.d);
        REQUIRE(m.has_value());
        CHECK(m->j == j);
        CHECK(m->k == k);
        CHECK(m->ell == en.params.ell);
        CHECK(m->e == en.e);
        CHECK(m->family_case == en.family_case);
      }
    }
  }
}

TEST_CASE("closed form agrees with the continued fraction (d <= 10^5)") {
  for (std::int64_t j = 2; j <= 10; ++j) {
    for (long k = 1; k <= 10; ++k) {
      for (const auto& en : pellcf::enumerate_family_up_to(j, k, 100000).entries) {
        CAPTURE(en.d);
        const auto cf = pellcf::expand_sqrt(en.d);
        CHECK(cf.e == en.e);
        REQUIRE(cf.period_length() == static_cast<std::size_t>(j));
        for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) CHECK(cf.period[i] == k);
        const auto s = pellcf::solve_fundamental(en.d);
        CHECK(s.x == en.x);
        CHECK(s.y == en.y);
        CHECK(s.sign == en.sign);
      }
    }
  }
}

TEST_CASE("entries far out in ell stay exact") {
  const BigInt ell("123456789012345678901234567890");
  const auto en = pellcf::make_entry(9, 4, ell);
  CHECK(en.x * en.x - en.d * en.y * en.y == -1);
  const auto m = pellcf::membership(en.d);
  REQUIRE(m.has_value());
  CHECK(m->ell == ell);
}
