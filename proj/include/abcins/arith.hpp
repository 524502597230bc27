#pragma once

#include <cstdint>
#include <vector>

#include "abcins/bigint.hpp"
#include "abcins/factorization.hpp"
#include "abcins/prime_table.hpp"

namespace abcins {

/// Product of the distinct primes of f; 1 for units. Sign is ignored.
BigInt radical(const Factorization& f);

/// Largest prime in f, or 1 for +-1 (1 is the largest non-composite divisor of a unit).
std::uint64_t largest_prime(const Factorization& f);

/// Product of all primes <= x; 1 for x < 2. Throws CoverageError if x > table.limit().
BigInt primorial(std::uint64_t x, const PrimeTable& table);
BigInt primorial(double x, const PrimeTable& table);

/// Chebyshev theta: sum of log p over primes p <= x, in ascending prime order
/// with Neumaier-compensated summation.
double chebyshev_theta(double x, const PrimeTable& table);

/// log(primorial(x)) evaluated from the exact product.
double log_primorial(double x, const PrimeTable& table);

/// True iff every prime <= P+(f) divides f. Units are insulated. Sign is ignored.
bool is_insulated(const Factorization& f, const PrimeTable& table);

/// Smallest m >= 1 with f * m insulated: the product of the primes below
/// P+(f) that do not divide f.
BigInt insulator(const Factorization& f, const PrimeTable& table);

/// Product of a sorted range of integers by balanced splitting.
BigInt product_tree(const std::uint32_t* first, const std::uint32_t* last);

// Prefix primorials p_1, p_1 p_2, ... for every sieved prime up to a bound.
// Memory grows quadratically in the number of primes; intended for enumeration
// bounds up to ~10^5.
class PrimorialCache {
 public:
  PrimorialCache(const PrimeTable& table, std::uint64_t bound);

  std::uint64_t bound() const noexcept { return bound_; }

  /// primorial(x) for x <= bound().
  const BigInt& at(std::uint64_t x) const;

 private:
  const PrimeTable* table_;
  std::uint64_t bound_;
  BigInt one_{1};
  std::vector<BigInt> prefix_;
};

}  // namespace abcins
