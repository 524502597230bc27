#include "abcins/factorization.hpp"

#include <cmath>
#include <limits>

#include "abcins/errors.hpp"

namespace abcins {

double log_bigint(const BigInt& v) {
  signed long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

Factorization::Factorization(int sign, std::vector<PrimePower> factors)
    : sign_(sign), factors_(std::move(factors)) {
  if (sign != 1 && sign != -1) throw InvalidArgument("factorization sign must be +1 or -1");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].prime < 2 || factors_[i].exponent == 0)
      throw InvalidArgument("factorization entries need prime >= 2 and exponent >= 1");
    if (i > 0 && factors_[i].prime <= factors_[i - 1].prime)
      throw InvalidArgument("factorization primes must be strictly increasing");
  }
}

BigInt Factorization::value() const {
  BigInt v = 1;
  BigInt pe;
  for (const auto& [p, e] : factors_) {
    mpz_pow_ui(pe.get_mpz_t(), to_bigint(p).get_mpz_t(), e);
    v *= pe;
  }
  return sign_ < 0 ? BigInt(-v) : v;
}

std::string Factorization::to_string() const {
  std::string s = sign_ < 0 ? "-" : "+";
  if (factors_.empty()) return s + "1";
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) s += " * ";
    first = false;
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Factorization operator*(const Factorization& x, const Factorization& y) {
  std::vector<PrimePower> merged;
  merged.reserve(x.factors_.size() + y.factors_.size());
  auto i = x.factors_.begin();
  auto j = y.factors_.begin();
  while (i != x.factors_.end() || j != y.factors_.end()) {
    if (j == y.factors_.end() || (i != x.factors_.end() && i->prime < j->prime)) {
      merged.push_back(*i++);
    } else if (i == x.factors_.end() || j->prime < i->prime) {
      merged.push_back(*j++);
    } else {
      merged.push_back({i->prime, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  Factorization r;
  r.sign_ = x.sign_ * y.sign_;
  r.factors_ = std::move(merged);
  return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

void push_power(std::vector<PrimePower>& out, std::uint64_t p) {
  if (!out.empty() && out.back().prime == p)
    ++out.back().exponent;
  else
    out.push_back({p, 1});
}

}  // namespace

Factorization factorize_magnitude(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("cannot factorize zero");
  std::vector<PrimePower> out;
  if (n <= table.limit()) {
    while (n > 1) {
      std::uint64_t p = table.spf(n);
      push_power(out, p);
      n /= p;
    }
    return Factorization(1, std::move(out));
  }

  std::uint64_t m = n;
  for (std::uint64_t p : table.primes()) {
    if (p * p > m) break;
    if (m % p != 0) continue;
    out.push_back({p, 0});
    while (m % p == 0) {
      m /= p;
      ++out.back().exponent;
    }
    if (m <= table.limit()) break;
  }
  if (m > 1 && m <= table.limit()) {
    while (m > 1) {
      std::uint64_t p = table.spf(m);
      push_power(out, p);
      m /= p;
    }
  } else if (m > 1) {
    // Either p*p > m stopped the loop (m is prime) or the sieve ran out.
    if (!is_prime_u64(m)) throw IncompleteFactorization(m);
    out.push_back({m, 1});
  }
  return Factorization(1, std::move(out));
}

Factorization factorize(std::int64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("cannot factorize zero");
  std::uint64_t mag = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  Factorization f = factorize_magnitude(mag, table);
  return n < 0 ? Factorization(-1, f.factors()) : f;
}

}  // namespace abcins
