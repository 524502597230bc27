#pragma once

#include <cstdint>

#include "abcins/arith.hpp"
#include "abcins/bigint.hpp"
#include "abcins/factorization.hpp"
#include "abcins/prime_table.hpp"

namespace abcins {

/// Canonical representative (A, B, C) = (a, b, -(a+b)) of a primitive
/// non-cuspidal solution of A + B + C = 0, with 0 < a <= b and gcd(a, b) = 1.
/// a + b is kept below 2^63 so C is representable as a signed 64-bit value.
class Triple {
 public:
  /// Throws InvalidTriple naming the violated condition.
  Triple(std::uint64_t a, std::uint64_t b);

  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  /// The negative entry -(a+b).
  std::int64_t c() const noexcept { return -static_cast<std::int64_t>(a_ + b_); }

  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

struct CanonicalTriple {
  Triple triple;
  /// Size of the orbit under permutations and a global sign: 6 for (1,1,-2), 12 otherwise.
  unsigned orbit_size;
};

/// Map any ordered, signed solution to its canonical representative. The
/// unit-equation view of the input is (x, y) = (-A/C, -B/C); every element of
/// an orbit yields the same canonical triple.
CanonicalTriple canonicalize(std::int64_t A, std::int64_t B, std::int64_t C);

/// Measured quantities of one triple. Logarithms are natural.
struct TripleStats {
  std::uint64_t height = 0;      // H = max |A|,|B|,|C|
  BigInt conductor;              // N = rad(ABC)
  std::uint64_t smoothness = 0;  // S = P+(ABC)
  BigInt insulator;              // I = insulator(ABC)
  double abc_quality = 0;        // log H / log N
  double xyz_merit = 0;          // log H / S^(2/3)
  double weak_ratio = 0;         // log H / S
};

std::uint64_t height(const Triple& t);

/// Factorization of the product ABC = -a b (a+b).
Factorization abc_factorization(const Triple& t, const PrimeTable& table);

BigInt conductor(const Triple& t, const PrimeTable& table);
std::uint64_t smoothness(const Triple& t, const PrimeTable& table);
BigInt triple_insulator(const Triple& t, const PrimeTable& table);

TripleStats stats(const Triple& t, const PrimeTable& table);

/// Same, taking primorial(S) from a cache instead of recomputing the missing-prime product.
TripleStats stats(const Triple& t, const Factorization& abc, const PrimorialCache& cache);

double abc_quality(const TripleStats& s);
double xyz_merit(const TripleStats& s);
double weak_xyz_ratio(const TripleStats& s);

/// Fill the three merit fields from height, smoothness and log N.
/// Callers pass log_bigint(conductor) so every code path yields identical bits.
void fill_merits(TripleStats& s, double log_conductor);

/// Canonical form of (2^k (2^k - 2), 1, -(2^k - 1)^2), which has H > N for every k >= 2.
/// Valid for 2 <= k <= 31.
Triple mersenne_family(int k);

}  // namespace abcins
