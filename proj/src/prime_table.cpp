#include "abcins/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>

#include "abcins/errors.hpp"

namespace abcins {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw InvalidArgument("prime table limit must be >= 2, got " + std::to_string(limit));
  if (limit > kMaxLimit)
    throw InvalidArgument("prime table limit must be <= " + std::to_string(kMaxLimit));

  const std::uint64_t bytes = (limit + 1) * sizeof(std::uint16_t);
  try {
    spf_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate sieve of " + std::to_string(bytes) + " bytes for limit " +
                            std::to_string(limit),
                        bytes);
  }

  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint16_t>(i);
  }

  // pi(x) < 1.26 x / log x
  std::size_t estimate = limit < 64 ? 32 : static_cast<std::size_t>(1.26 * limit / std::log(double(limit)));
  primes_.reserve(estimate);
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (spf_[i] == 0) primes_.push_back(static_cast<std::uint32_t>(i));
}

std::size_t PrimeTable::count_upto(std::uint64_t x) const {
  if (x >= limit_) return primes_.size();
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

}  // namespace abcins
