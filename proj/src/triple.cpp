#include "abcins/triple.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "abcins/errors.hpp"

namespace abcins {

namespace {
constexpr std::uint64_t kMaxHeight = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
}

Triple::Triple(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {
  if (a == 0 || b == 0) throw InvalidTriple("invalid triple: non-cuspidal requires a, b > 0");
  if (a > b) throw InvalidTriple("invalid triple: canonical form requires a <= b");
  if (b > kMaxHeight - a) throw InvalidTriple("invalid triple: a + b exceeds 2^63 - 1");
  if (std::gcd(a, b) != 1) throw InvalidTriple("invalid triple: not primitive, gcd(a, b) != 1");
}

CanonicalTriple canonicalize(std::int64_t A, std::int64_t B, std::int64_t C) {
  __int128 sum = static_cast<__int128>(A) + B + C;
  if (sum != 0) throw InvalidTriple("invalid triple: A + B + C != 0");
  if (A == 0 || B == 0 || C == 0) throw InvalidTriple("invalid triple: cuspidal, ABC = 0");
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (A == kMin || B == kMin || C == kMin) throw InvalidTriple("invalid triple: entry out of range");
  auto mag = [](std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
  std::array<std::uint64_t, 3> m{mag(A), mag(B), mag(C)};
  if (std::gcd(std::gcd(m[0], m[1]), m[2]) != 1) throw InvalidTriple("invalid triple: not primitive, gcd(A, B, C) != 1");
  // Exactly one entry has the sign opposite to the other two and carries the largest magnitude.
  std::sort(m.begin(), m.end());
  Triple t(m[0], m[1]);
  return {t, t.a() == t.b() ? 6u : 12u};
}

std::uint64_t height(const Triple& t) { return t.a() + t.b(); }

Factorization abc_factorization(const Triple& t, const PrimeTable& table) {
  Factorization f = factorize_magnitude(t.a(), table) * factorize_magnitude(t.b(), table) *
                    factorize_magnitude(t.a() + t.b(), table);
  return Factorization(-1, f.factors());
}

BigInt conductor(const Triple& t, const PrimeTable& table) { return radical(abc_factorization(t, table)); }

std::uint64_t smoothness(const Triple& t, const PrimeTable& table) {
  return largest_prime(abc_factorization(t, table));
}

BigInt triple_insulator(const Triple& t, const PrimeTable& table) {
  return insulator(abc_factorization(t, table), table);
}

void fill_merits(TripleStats& s, double log_conductor) {
  double log_h = std::log(static_cast<double>(s.height));
  double S = static_cast<double>(s.smoothness);
  s.abc_quality = log_h / log_conductor;
  s.xyz_merit = log_h / std::cbrt(S * S);
  s.weak_ratio = log_h / S;
}

TripleStats stats(const Triple& t, const PrimeTable& table) {
  Factorization f = abc_factorization(t, table);
  TripleStats s;
  s.height = height(t);
  s.conductor = radical(f);
  s.smoothness = largest_prime(f);
  s.insulator = insulator(f, table);
  fill_merits(s, log_bigint(s.conductor));
  return s;
}

TripleStats stats(const Triple& t, const Factorization& abc, const PrimorialCache& cache) {
  TripleStats s;
  s.height = height(t);
  s.conductor = radical(abc);
  s.smoothness = largest_prime(abc);
  mpz_divexact(s.insulator.get_mpz_t(), cache.at(s.smoothness).get_mpz_t(), s.conductor.get_mpz_t());
  fill_merits(s, log_bigint(s.conductor));
  return s;
}

double abc_quality(const TripleStats& s) { return s.abc_quality; }
double xyz_merit(const TripleStats& s) { return s.xyz_merit; }
double weak_xyz_ratio(const TripleStats& s) { return s.weak_ratio; }

Triple mersenne_family(int k) {
  if (k < 2) throw InvalidArgument("mersenne_family needs k >= 2 (k = 1 is cuspidal), got " + std::to_string(k));
  if (k > 31) throw InvalidArgument("mersenne_family supports k <= 31, got " + std::to_string(k));
  std::int64_t p = std::int64_t{1} << k;
  std::int64_t A = p * (p - 2);
  std::int64_t C = -(p - 1) * (p - 1);
  return canonicalize(A, 1, C).triple;
}

}  // namespace abcins
