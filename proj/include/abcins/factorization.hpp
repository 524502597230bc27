#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abcins/bigint.hpp"
#include "abcins/prime_table.hpp"

namespace abcins {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact sign and prime-power decomposition of a nonzero integer.
class Factorization {
 public:
  /// The unit +1.
  Factorization() = default;

  /// Validates sign in {+1,-1}, strictly increasing primes and exponents >= 1.
  /// Primality of the entries is the caller's responsibility.
  Factorization(int sign, std::vector<PrimePower> factors);

  int sign() const noexcept { return sign_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }

  /// sign * prod p^e.
  BigInt value() const;

  /// Canonical rendering "+p1^e1 * p2 * ...", exponent 1 omitted, units "+1"/"-1".
  std::string to_string() const;

  /// Factorization of the product.
  friend Factorization operator*(const Factorization& x, const Factorization& y);
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  int sign_ = 1;
  std::vector<PrimePower> factors_;
};

/// Factor n using the sieve. Values up to table.limit() use smallest-prime-factor
/// lookup; larger ones use trial division by the sieved primes and accept a
/// single leftover cofactor only when it is proven prime.
/// Throws InvalidArgument for n == 0 and IncompleteFactorization otherwise.
Factorization factorize(std::int64_t n, const PrimeTable& table);

/// Same as factorize() for a positive magnitude (sign +1).
Factorization factorize_magnitude(std::uint64_t n, const PrimeTable& table);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace abcins
