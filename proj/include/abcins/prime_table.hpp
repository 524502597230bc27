#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace abcins {

// Smallest-prime-factor sieve over [2, limit].
//
// A composite n <= limit has spf(n) <= sqrt(limit) < 2^16, so spf is stored
// in 16-bit words with 0 marking primes. Memory is about 2 bytes per integer
// plus 4 bytes per prime: limit 10^8 needs ~0.22 GB, 10^9 ~2.2 GB. The hard
// ceiling is kMaxLimit. The table is immutable once built and may be shared
// freely between threads.
class PrimeTable {
 public:
  static constexpr std::uint64_t kMaxLimit = 0xFFFFFFFFull;

  /// Throws InvalidArgument for limit < 2 or above kMaxLimit, ResourceError
  /// if the sieve cannot be allocated.
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of n, for 2 <= n <= limit.
  std::uint32_t spf(std::uint64_t n) const {
    std::uint16_t p = spf_[n];
    return p ? p : static_cast<std::uint32_t>(n);
  }

  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit_ && spf_[n] == 0; }

  /// Number of primes <= x, with x clamped to the table limit.
  std::size_t count_upto(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint16_t> spf_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeTable build_prime_table(std::uint64_t limit) { return PrimeTable(limit); }

}  // namespace abcins
