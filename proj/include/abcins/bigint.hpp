#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace abcins {

using BigInt = mpz_class;

inline BigInt to_bigint(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt to_bigint(unsigned __int128 v) {
  std::uint64_t words[2] = {static_cast<std::uint64_t>(v >> 64), static_cast<std::uint64_t>(v)};
  BigInt r;
  mpz_import(r.get_mpz_t(), 2, 1, sizeof(std::uint64_t), 0, 0, words);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Natural logarithm of a positive big integer, accurate to double precision.
double log_bigint(const BigInt& v);

}  // namespace abcins
