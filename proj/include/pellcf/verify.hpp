#pragma once

// Sweeps that cross-check the closed formulas and the continued fraction
// path against the brute-force oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pellcf {

struct VerifyOptions {
  std::uint64_t d_max = 10000;
  std::int64_t j_max = 6;
  std::uint64_t k_max = 6;
  // Cutoff for the brute-force Pell search, and the largest d it runs on.
  std::uint64_t pell_y_max = 10000;
  std::uint64_t pell_d_max = 2000;
  unsigned threads = 1;
  // Test hook: flips the expected sign in the soundness check.
  bool inject_sign_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  // "PASS: a, b, c" or "FAIL: name: counterexample" lines.
  std::string summary() const;
};

// soundness: each family entry with d <= d_max expands as [e; k..k, 2e] with
//   period j, satisfies x^2 - d y^2 = (-1)^j and matches solve_fundamental.
// completeness: oracle pattern classification of every d <= d_max equals the
//   family enumeration for j <= j_max, k <= k_max.
// pell-agreement: solve_fundamental vs brute_pell for d <= min(d_max, pell_d_max).
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace pellcf
