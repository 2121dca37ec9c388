#include "pellcf/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pellcf/errors.hpp"

namespace pellcf::oracle {

namespace {

void require_nonsquare(const BigInt& d) {
  if (d < 2) throw DomainError("d must be at least 2, got " + to_decimal(d));
  if (mpz_perfect_square_p(d.get_mpz_t()) != 0) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    throw PerfectSquareError(d, root);
  }
}

// (p + q sqrt(d)) / r, kept with r > 0 and gcd(p, q, r) = 1.
class RationalSurd {
 public:
  explicit RationalSurd(const BigInt& d) : p_(0), q_(1), r_(1), d_(d) {}

  BigInt floor() const {
    BigInt s;
    BigInt q2d = q_ * q_ * d_;
    mpz_sqrt(s.get_mpz_t(), q2d.get_mpz_t());
    // q sqrt(d) is irrational and lies strictly between lower and lower + 1.
    BigInt lower = q_ > 0 ? s : BigInt(-s - 1);
    BigInt out;
    BigInt numer = p_ + lower;
    mpz_fdiv_q(out.get_mpz_t(), numer.get_mpz_t(), r_.get_mpz_t());
    return out;
  }

  // Replaces alpha with 1 / (alpha - a).
  void invert_after(const BigInt& a) {
    BigInt shifted = p_ - a * r_;
    // r / (shifted + q sqrt(d)) = r (q sqrt(d) - shifted) / (q^2 d - shifted^2)
    BigInt np = -r_ * shifted;
    BigInt nq = r_ * q_;
    BigInt nr = q_ * q_ * d_ - shifted * shifted;
    if (nr < 0) {
      np = -np;
      nq = -nq;
      nr = -nr;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), np.get_mpz_t(), nq.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nr.get_mpz_t());
    p_ = np / g;
    q_ = nq / g;
    r_ = nr / g;
  }

  BigInt next_quotient() {
    BigInt a = floor();
    invert_after(a);
    return a;
  }

  bool same_as(const RationalSurd& o) const { return p_ == o.p_ && q_ == o.q_ && r_ == o.r_; }

 private:
  BigInt p_, q_, r_, d_;
};

bool is_square_u64(std::uint64_t v, std::uint64_t& root) {
  // Squares mod 64 occupy 12 of 64 residues.
  constexpr std::uint64_t kSquaresMod64 = [] {
    std::uint64_t mask = 0;
    for (std::uint64_t r = 0; r < 64; ++r) mask |= 1ULL << (r * r % 64);
    return mask;
  }();
  if (((kSquaresMod64 >> (v & 63)) & 1) == 0) return false;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  root = r;
  return r * r == v;
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

std::optional<PellSolution> brute_pell(const BigInt& d, PellSign sign, std::uint64_t y_max) {
  require_nonsquare(d);
  const int s = to_int(sign);

  // 64-bit path while d y_max^2 + 1 stays below 2^63.
  if (auto small = to_u64(d); small && y_max < (1ULL << 31)) {
    const unsigned __int128 top = static_cast<unsigned __int128>(*small) * y_max * y_max + 1;
    if (top < (static_cast<unsigned __int128>(1) << 63)) {
      for (std::uint64_t y = 1; y <= y_max; ++y) {
        const std::uint64_t v = *small * y * y;
        std::uint64_t x = 0;
        if (is_square_u64(s > 0 ? v + 1 : v - 1, x)) {
          return PellSolution{from_u64(x), from_u64(y), sign, d};
        }
      }
      return std::nullopt;
    }
  }

  BigInt x;
  for (std::uint64_t y = 1; y <= y_max; ++y) {
    const BigInt by = from_u64(y);
    const BigInt v = d * by * by + s;
    if (mpz_perfect_square_p(v.get_mpz_t()) != 0) {
      mpz_sqrt(x.get_mpz_t(), v.get_mpz_t());
      return PellSolution{x, by, sign, d};
    }
  }
  return std::nullopt;
}

std::vector<BigInt> brute_cf_prefix(const BigInt& d, std::size_t n_terms) {
  require_nonsquare(d);
  RationalSurd alpha(d);
  std::vector<BigInt> out;
  out.reserve(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) out.push_back(alpha.next_quotient());
  return out;
}

std::optional<UniformPattern> uniform_pattern(const BigInt& d, std::int64_t j_max) {
  require_nonsquare(d);
  RationalSurd alpha(d);
  const BigInt e = alpha.next_quotient();
  const BigInt two_e = 2 * e;
  const RationalSurd first = alpha;

  BigInt k;
  for (std::int64_t n = 1; n <= j_max; ++n) {
    BigInt a = alpha.next_quotient();
    if (n == 1) k = a;
    if (alpha.same_as(first)) {
      // Exact period n.
      if (n < 2 || a != two_e) return std::nullopt;
      return UniformPattern{n, k, e};
    }
    if (n >= 2 && a != k) return std::nullopt;
  }
  return std::nullopt;
}

std::vector<BigInt> pattern_scan(const BigInt& d_max, std::int64_t j, const BigInt& k) {
  std::vector<BigInt> out;
  for (BigInt d = 2; d <= d_max; ++d) {
    if (mpz_perfect_square_p(d.get_mpz_t()) != 0) continue;
    auto p = uniform_pattern(d, j);
    if (p && p->j == j && p->k == k) out.push_back(d);
  }
  return out;
}

std::vector<PellSolution> brute_all_solutions(std::uint64_t d, std::uint64_t x_max) {
  if (x_max > 1'000'000'000ULL) throw DomainError("brute_all_solutions needs x_max <= 10^9");
  require_nonsquare(from_u64(d));

  // Any square is a square mod M, so only y residues where d y^2 + 1 or
  // d y^2 - 1 is a quadratic residue mod M need the exact test.
  constexpr std::uint64_t M = 16 * 9 * 5 * 7 * 11 * 13;
  std::vector<bool> square_mod(M, false);
  for (std::uint64_t r = 0; r < M; ++r) square_mod[r * r % M] = true;
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < M; ++r) {
    const std::uint64_t t = (d % M) * (r * r % M) % M;
    if (square_mod[(t + 1) % M] || square_mod[(t + M - 1) % M]) residues.push_back(r);
  }

  const std::uint64_t x2_max = x_max * x_max;
  // d y^2 <= x^2 + 1
  const auto y_max = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x2_max + 1) / d)) + 1;

  std::vector<PellSolution> out;
  for (std::uint64_t base = 0; base <= y_max; base += M) {
    for (std::uint64_t r : residues) {
      const std::uint64_t y = base + r;
      if (y == 0) continue;
      if (y > y_max) break;
      const std::uint64_t v = d * y * y;
      std::uint64_t x = 0;
      if (v > 0 && is_square_u64(v - 1, x) && x <= x_max) {
        out.push_back({from_u64(x), from_u64(y), PellSign::Minus, from_u64(d)});
      } else if (is_square_u64(v + 1, x) && x <= x_max) {
        out.push_back({from_u64(x), from_u64(y), PellSign::Plus, from_u64(d)});
      }
    }
  }
  return out;
}

}  // namespace pellcf::oracle
