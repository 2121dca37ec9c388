#pragma once

// Brute-force reference implementations for cross-checking the main modules.
// Nothing here calls into cf_engine, pell or family: square roots come from
// GMP and the expansion keeps its own (p + q sqrt(d)) / r state.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pellcf/bigint.hpp"
#include "pellcf/pell.hpp"

namespace pellcf::oracle {

// First y in 1..y_max with d y^2 + sign a perfect square. nullopt means "not
// found below y_max", not "unsolvable".
std::optional<PellSolution> brute_pell(const BigInt& d, PellSign sign, std::uint64_t y_max);

// a_0 .. a_{n_terms-1} of sqrt(d).
std::vector<BigInt> brute_cf_prefix(const BigInt& d, std::size_t n_terms);

struct UniformPattern {
  std::int64_t j = 0;
  BigInt k;
  BigInt e;
};

// If sqrt(d) = [e; k, ..., k, 2e] with exact period 2 <= j <= j_max, returns it.
std::optional<UniformPattern> uniform_pattern(const BigInt& d, std::int64_t j_max);

// All non-square d <= d_max with sqrt(d) = [e; k, ..., k, 2e], period exactly j.
std::vector<BigInt> pattern_scan(const BigInt& d_max, std::int64_t j, const BigInt& k);

// Every (x, y) with x, y >= 1, x <= x_max and x^2 - d y^2 = +-1, sorted by x.
// Requires x_max <= 10^9 so x^2 fits in 64 bits.
std::vector<PellSolution> brute_all_solutions(std::uint64_t d, std::uint64_t x_max);

}  // namespace pellcf::oracle
