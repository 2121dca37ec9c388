#include "pellcf/verify.hpp"

#include <algorithm>
#include <exception>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "pellcf/cf_engine.hpp"
#include "pellcf/family.hpp"
#include "pellcf/oracle.hpp"
#include "pellcf/pell.hpp"

namespace pellcf {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.cases << " cases)";
    if (c.counterexample) out << " first counterexample: " << *c.counterexample;
    out << '\n';
  }
  std::vector<std::string> names;
  for (const auto& c : checks) {
    if (c.passed == passed()) names.push_back(c.name);
  }
  out << (passed() ? "PASS: " : "FAIL: ");
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
  out << '\n';
  return out.str();
}

namespace {

// Partial result of one contiguous chunk of work.
struct ChunkOutcome {
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;
};

std::uint64_t chunk_count(std::uint64_t n, unsigned threads) {
  return std::min<std::uint64_t>(std::max(1u, threads), std::max<std::uint64_t>(n, 1));
}

// Splits [0, n) into contiguous chunks, runs them on up to `threads` workers,
// and returns the outcomes in chunk order.
template <typename Fn>
std::vector<ChunkOutcome> run_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
  const std::uint64_t chunks = chunk_count(n, threads);
  std::vector<ChunkOutcome> out(chunks);
  auto work = [&](std::uint64_t c) {
    const std::uint64_t begin = n * c / chunks;
    const std::uint64_t end = n * (c + 1) / chunks;
    try {
      out[c] = fn(c, begin, end);
    } catch (const std::exception& ex) {
      out[c].counterexample = std::string("exception: ") + ex.what();
    }
  };
  if (chunks == 1) {
    work(0);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
  for (auto& t : pool) t.join();
  return out;
}

CheckResult merge(std::string name, const std::vector<ChunkOutcome>& parts) {
  CheckResult r{std::move(name), true, 0, std::nullopt};
  for (const auto& p : parts) {
    r.cases += p.cases;
    if (p.counterexample && !r.counterexample) {
      r.passed = false;
      r.counterexample = p.counterexample;
    }
  }
  return r;
}

std::string entry_label(const FamilyEntry& en) {
  return "j=" + std::to_string(en.params.j) + " k=" + to_decimal(en.params.k) +
         " ell=" + to_decimal(en.params.ell) + " d=" + to_decimal(en.d);
}

using Grid = std::map<std::pair<std::int64_t, std::uint64_t>, std::set<std::uint64_t>>;

CheckResult check_soundness(const VerifyOptions& opt) {
  std::vector<FamilyEntry> entries;
  for (std::int64_t j = 2; j <= opt.j_max; ++j) {
    for (std::uint64_t k = 1; k <= opt.k_max; ++k) {
      auto listing = enumerate_family_up_to(j, BigInt(static_cast<unsigned long>(k)),
                                            BigInt(static_cast<unsigned long>(opt.d_max)));
      for (auto& en : listing.entries) entries.push_back(std::move(en));
    }
  }
  auto parts = run_chunks(entries.size(), opt.threads, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
    ChunkOutcome out;
    for (std::uint64_t i = b; i < e; ++i) {
      if (out.counterexample) {
        ++out.cases;
        continue;
      }
      const FamilyEntry& en = entries[i];
      ++out.cases;
      const CFExpansion cf = expand_sqrt(en.d);
      bool ok = cf.e == en.e && cf.period_length() == static_cast<std::size_t>(en.params.j) &&
                cf.period.back() == 2 * en.e;
      for (std::size_t t = 0; ok && t + 1 < cf.period.size(); ++t) ok = cf.period[t] == en.params.k;
      if (!ok) {
        out.counterexample = entry_label(en) + ": expansion " + to_decimal(cf.e) + "; period " +
                             std::to_string(cf.period_length());
        continue;
      }
      int expected = en.params.j % 2 == 0 ? 1 : -1;
      if (opt.inject_sign_fault) expected = -expected;
      const BigInt norm = en.x * en.x - en.d * en.y * en.y;
      if (norm != expected) {
        out.counterexample = entry_label(en) + ": x=" + to_decimal(en.x) + " y=" +
                             to_decimal(en.y) + " gives x^2-dy^2=" + to_decimal(norm) +
                             ", expected " + std::to_string(expected);
        continue;
      }
      const PellSolution fund = solve_fundamental(en.d);
      if (fund.x != en.x || fund.y != en.y) {
        out.counterexample = entry_label(en) + ": closed form (" + to_decimal(en.x) + ", " +
                             to_decimal(en.y) + ") vs continued fraction (" + to_decimal(fund.x) +
                             ", " + to_decimal(fund.y) + ")";
      }
    }
    return out;
  });
  return merge("soundness", parts);
}

CheckResult check_completeness(const VerifyOptions& opt) {
  Grid family;
  for (std::int64_t j = 2; j <= opt.j_max; ++j) {
    for (std::uint64_t k = 1; k <= opt.k_max; ++k) {
      auto listing = enumerate_family_up_to(j, BigInt(static_cast<unsigned long>(k)),
                                            BigInt(static_cast<unsigned long>(opt.d_max)));
      auto& bucket = family[{j, k}];
      for (const auto& en : listing.entries) bucket.insert(en.d.get_ui());
    }
  }

  const std::uint64_t n = opt.d_max >= 2 ? opt.d_max - 1 : 0;  // d = 2 .. d_max
  std::vector<Grid> found(chunk_count(n, opt.threads));
  auto parts = run_chunks(n, opt.threads, [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
    ChunkOutcome out;
    Grid local;
    for (std::uint64_t i = b; i < e; ++i) {
      const std::uint64_t d = i + 2;
      const BigInt bd(static_cast<unsigned long>(d));
      if (mpz_perfect_square_p(bd.get_mpz_t()) != 0) continue;
      ++out.cases;
      auto p = oracle::uniform_pattern(bd, opt.j_max);
      if (p && p->k <= static_cast<unsigned long>(opt.k_max)) local[{p->j, p->k.get_ui()}].insert(d);
    }
    found[c] = std::move(local);
    return out;
  });

  Grid oracle_grid;
  for (auto& g : found) {
    for (auto& [key, ds] : g) oracle_grid[key].insert(ds.begin(), ds.end());
  }
  CheckResult r = merge("completeness", parts);
  if (!r.passed) return r;
  for (const auto& [key, fam] : family) {
    const auto it = oracle_grid.find(key);
    const std::set<std::uint64_t> empty;
    const auto& orc = it == oracle_grid.end() ? empty : it->second;
    if (fam == orc) continue;
    std::vector<std::uint64_t> only_fam, only_orc;
    std::set_difference(fam.begin(), fam.end(), orc.begin(), orc.end(), std::back_inserter(only_fam));
    std::set_difference(orc.begin(), orc.end(), fam.begin(), fam.end(), std::back_inserter(only_orc));
    std::ostringstream msg;
    msg << "j=" << key.first << " k=" << key.second << ": ";
    if (!only_orc.empty()) msg << "d=" << only_orc.front() << " has the pattern but is not enumerated";
    else msg << "d=" << only_fam.front() << " is enumerated but lacks the pattern";
    r.passed = false;
    r.counterexample = msg.str();
    break;
  }
  return r;
}

CheckResult check_pell_agreement(const VerifyOptions& opt) {
  const std::uint64_t top = std::min(opt.d_max, opt.pell_d_max);
  const std::uint64_t n = top >= 2 ? top - 1 : 0;
  auto parts = run_chunks(n, opt.threads, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
    ChunkOutcome out;
    for (std::uint64_t i = b; i < e; ++i) {
      const BigInt d(static_cast<unsigned long>(i + 2));
      if (mpz_perfect_square_p(d.get_mpz_t()) != 0) continue;
      ++out.cases;
      if (out.counterexample) continue;
      const PellSolution fund = solve_fundamental(d);
      const bool beyond_cutoff = fund.y > static_cast<unsigned long>(opt.pell_y_max);
      const auto minus = oracle::brute_pell(d, PellSign::Minus, opt.pell_y_max);
      std::optional<PellSolution> brute = minus;
      if (!brute && fund.sign == PellSign::Plus) {
        brute = oracle::brute_pell(d, PellSign::Plus, opt.pell_y_max);
      }
      const bool ok = brute ? (*brute == fund) : beyond_cutoff;
      if (!ok) {
        std::ostringstream msg;
        msg << "d=" << d.get_str() << ": continued fraction gives (" << fund.x.get_str() << ", "
            << fund.y.get_str() << ", " << to_int(fund.sign) << ")";
        if (brute) {
          msg << ", brute force gives (" << brute->x.get_str() << ", " << brute->y.get_str()
              << ", " << to_int(brute->sign) << ")";
        } else {
          msg << ", brute force finds nothing with y <= " << opt.pell_y_max;
        }
        out.counterexample = msg.str();
      }
    }
    return out;
  });
  return merge("pell-agreement", parts);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_soundness(options));
  report.checks.push_back(check_completeness(options));
  report.checks.push_back(check_pell_agreement(options));
  return report;
}

}  // namespace pellcf
