#pragma once

// Naive reference implementations for tests. Nothing here touches the sieve,
// the factorization type or the enumeration code paths under test.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors by trial division, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    ps.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline mpz_class rad(std::uint64_t n) {
  mpz_class r = 1;
  for (auto p : prime_divisors(n)) r *= static_cast<unsigned long>(p);
  return r;
}

inline std::uint64_t gpf(std::uint64_t n) {
  auto ps = prime_divisors(n);
  return ps.empty() ? 1 : ps.back();
}

/// Every prime up to the largest prime factor divides n.
inline bool insulated(const std::vector<std::uint64_t>& primes_of_n) {
  if (primes_of_n.empty()) return true;
  std::uint64_t top = primes_of_n.back();
  for (std::uint64_t p = 2; p <= top; ++p)
    if (is_prime(p) && !std::binary_search(primes_of_n.begin(), primes_of_n.end(), p)) return false;
  return true;
}

inline mpz_class primorial(std::uint64_t x) {
  mpz_class r;
  mpz_primorial_ui(r.get_mpz_t(), x);
  return r;
}

/// Canonical triples (a, b) with a + b < X, found by scanning every ordered
/// signed pair (A, B) with |A|, |B| < X and sorting magnitudes.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> all_pairs(std::int64_t X) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::int64_t A = -(X - 1); A < X; ++A) {
    for (std::int64_t B = -(X - 1); B < X; ++B) {
      std::int64_t C = -(A + B);
      if (A == 0 || B == 0 || C == 0 || C >= X || C <= -X) continue;
      std::uint64_t m[3] = {static_cast<std::uint64_t>(std::abs(A)), static_cast<std::uint64_t>(std::abs(B)),
                            static_cast<std::uint64_t>(std::abs(C))};
      if (std::gcd(std::gcd(m[0], m[1]), m[2]) != 1) continue;
      std::sort(m, m + 3);
      out.emplace(m[0], m[1]);
    }
  }
  return out;
}

}  // namespace oracle

namespace oracle {

/// Primality flags up to n by trial division.
inline std::vector<bool> prime_flags(std::uint64_t n) {
  std::vector<bool> f(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) f[i] = is_prime(i);
  return f;
}

/// Smallest m in [1, cap] with n*m insulated, by direct ascending search; 0 if none.
/// flags must cover max(P+(n), P+(m)) for the m values tried.
inline std::uint64_t brute_insulator(std::uint64_t n, std::uint64_t cap, const std::vector<bool>& flags) {
  std::vector<std::uint64_t> pn = prime_divisors(n);
  for (std::uint64_t m = 1; m <= cap; ++m) {
    std::vector<std::uint64_t> pm = prime_divisors(m);
    std::vector<std::uint64_t> all;
    std::set_union(pn.begin(), pn.end(), pm.begin(), pm.end(), std::back_inserter(all));
    std::uint64_t top = all.empty() ? 1 : all.back();
    std::size_t primes_below = 0;
    for (std::uint64_t p = 2; p <= top; ++p) primes_below += flags[p];
    if (primes_below == all.size()) return m;
  }
  return 0;
}

/// Product of primes <= P+(n) not dividing n, by trial-division primality.
inline mpz_class missing_prime_product(std::uint64_t n, const std::vector<bool>& flags) {
  std::vector<std::uint64_t> pn = prime_divisors(n);
  mpz_class r = 1;
  if (pn.empty()) return r;
  for (std::uint64_t p = 2; p <= pn.back(); ++p)
    if (flags[p] && n % p != 0) r *= static_cast<unsigned long>(p);
  return r;
}

}  // namespace oracle
