#include "abcins/arith.hpp"

#include <cmath>
#include <string>

#include "abcins/errors.hpp"

namespace abcins {

namespace {

void require_coverage(std::uint64_t x, const PrimeTable& table, const char* what) {
  if (x > table.limit())
    throw CoverageError(std::string(what) + ": bound " + std::to_string(x) + " exceeds prime table limit " +
                        std::to_string(table.limit()) + "; build a larger table");
}

std::uint64_t floor_bound(double x) {
  if (!(x >= 0)) throw InvalidArgument("bound must be a non-negative number");
  return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace

BigInt radical(const Factorization& f) {
  BigInt r = 1;
  for (const auto& pp : f.factors()) r *= to_bigint(pp.prime);
  return r;
}

std::uint64_t largest_prime(const Factorization& f) {
  return f.is_unit() ? 1 : f.factors().back().prime;
}

BigInt product_tree(const std::uint32_t* first, const std::uint32_t* last) {
  auto n = last - first;
  if (n == 0) return 1;
  if (n <= 16) {
    BigInt r = 1;
    for (; first != last; ++first) r *= static_cast<unsigned long>(*first);
    return r;
  }
  auto mid = first + n / 2;
  return product_tree(first, mid) * product_tree(mid, last);
}

BigInt primorial(std::uint64_t x, const PrimeTable& table) {
  if (x < 2) return 1;
  require_coverage(x, table, "primorial");
  auto ps = table.primes();
  std::size_t k = table.count_upto(x);
  return product_tree(ps.data(), ps.data() + k);
}

BigInt primorial(double x, const PrimeTable& table) { return primorial(floor_bound(x), table); }

double chebyshev_theta(double x, const PrimeTable& table) {
  std::uint64_t n = floor_bound(x);
  if (n < 2) return 0.0;
  require_coverage(n, table, "chebyshev_theta");
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint32_t p : table.primes()) {
    if (p > n) break;
    double term = std::log(static_cast<double>(p));
    double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double log_primorial(double x, const PrimeTable& table) {
  BigInt p = primorial(x, table);
  return p == 1 ? 0.0 : log_bigint(p);
}

bool is_insulated(const Factorization& f, const PrimeTable& table) {
  std::uint64_t top = largest_prime(f);
  if (top < 2) return true;
  require_coverage(top, table, "is_insulated");
  // Every prime of f is <= top, so the sets agree iff the counts do.
  return table.count_upto(top) == f.factors().size();
}

BigInt insulator(const Factorization& f, const PrimeTable& table) {
  std::uint64_t top = largest_prime(f);
  if (top < 2) return 1;
  require_coverage(top, table, "insulator");
  std::vector<std::uint32_t> missing;
  auto fi = f.factors().begin();
  for (std::uint32_t p : table.primes()) {
    if (p > top) break;
    while (fi != f.factors().end() && fi->prime < p) ++fi;
    if (fi != f.factors().end() && fi->prime == p) continue;
    missing.push_back(p);
  }
  return product_tree(missing.data(), missing.data() + missing.size());
}

PrimorialCache::PrimorialCache(const PrimeTable& table, std::uint64_t bound) : table_(&table), bound_(bound) {
  require_coverage(bound, table, "primorial cache");
  std::size_t k = table.count_upto(bound);
  prefix_.reserve(k);
  BigInt acc = 1;
  for (std::size_t i = 0; i < k; ++i) {
    acc *= static_cast<unsigned long>(table.primes()[i]);
    prefix_.push_back(acc);
  }
}

const BigInt& PrimorialCache::at(std::uint64_t x) const {
  if (x < 2) return one_;
  require_coverage(x, *table_, "primorial cache lookup");
  if (x > bound_)
    throw CoverageError("primorial cache covers only up to " + std::to_string(bound_));
  return prefix_[table_->count_upto(x) - 1];
}

}  // namespace abcins
