#include "abcins/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

#include "abcins/arith.hpp"
#include "abcins/errors.hpp"

namespace abcins {

namespace {

// Per-integer radical and largest prime for 1..n, from the sieve.
struct RadicalTable {
  std::vector<std::uint32_t> rad;
  std::vector<std::uint32_t> gpf;

  RadicalTable(const PrimeTable& table, std::uint64_t n) : rad(n + 1, 1), gpf(n + 1, 1) {
    for (std::uint64_t m = 2; m <= n; ++m) {
      std::uint32_t p = table.spf(m);
      std::uint64_t q = m / p;
      // rad(m) = rad(q) * p unless p already divides q; gpf follows the same recursion.
      rad[m] = (q % p == 0) ? rad[q] : rad[q] * p;
      gpf[m] = std::max<std::uint32_t>(gpf[q], p);
    }
  }
};

class HeightScanner {
 public:
  HeightScanner(const PrimeTable& table, std::uint64_t max_height)
      : radicals_(table, max_height), primorials_(table, max_height) {}

  void scan(std::uint64_t h0, std::uint64_t h1, std::vector<Row>& out) const {
    for (std::uint64_t h = h0; h < h1; ++h) {
      for (std::uint64_t a = 1; 2 * a <= h; ++a) {
        if (std::gcd(a, h) != 1) continue;
        std::uint64_t b = h - a;
        out.push_back(make_row(a, b));
      }
    }
  }

 private:
  Row make_row(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t h = a + b;
    // a, b and a+b are pairwise coprime, so rad(ABC) is the plain product.
    unsigned __int128 n = static_cast<unsigned __int128>(radicals_.rad[a]) * radicals_.rad[b] * radicals_.rad[h];
    Row row{Triple(a, b), {}};
    TripleStats& s = row.stats;
    s.height = h;
    s.conductor = to_bigint(n);
    s.smoothness = std::max({radicals_.gpf[a], radicals_.gpf[b], radicals_.gpf[h]});
    mpz_divexact(s.insulator.get_mpz_t(), primorials_.at(s.smoothness).get_mpz_t(), s.conductor.get_mpz_t());
    fill_merits(s, log_bigint(s.conductor));
    return row;
  }

  RadicalTable radicals_;
  PrimorialCache primorials_;
};

}  // namespace

void enumerate_by_height(const HeightScanConfig& cfg, const PrimeTable& table, const RowSink& sink) {
  if (cfg.chunk == 0) throw InvalidArgument("height scan chunk must be positive");
  std::uint64_t end = cfg.inclusive ? cfg.height_bound + 1 : cfg.height_bound;
  if (end <= 2) return;
  std::uint64_t max_height = end - 1;
  if (table.limit() < max_height)
    throw CoverageError("height scan up to " + std::to_string(max_height) + " needs a prime table limit >= " +
                        std::to_string(max_height) + ", have " + std::to_string(table.limit()));

  HeightScanner scanner(table, max_height);
  unsigned workers = std::max(1u, cfg.threads);
  std::vector<std::vector<Row>> slots(workers);

  std::uint64_t h = 2;
  while (h < end) {
    // One wave: up to `workers` consecutive chunks, scanned concurrently, emitted in order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (unsigned w = 0; w < workers && h < end; ++w) {
      std::uint64_t stop = std::min(end, h + cfg.chunk);
      ranges.emplace_back(h, stop);
      h = stop;
    }
    for (auto& slot : slots) slot.clear();
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 1; w < ranges.size(); ++w)
        pool.emplace_back([&, w] { scanner.scan(ranges[w].first, ranges[w].second, slots[w]); });
      scanner.scan(ranges[0].first, ranges[0].second, slots[0]);
    }
    for (std::size_t w = 0; w < ranges.size(); ++w)
      for (const Row& row : slots[w]) sink(row);
  }
}

std::vector<Row> collect_by_height(const HeightScanConfig& cfg, const PrimeTable& table) {
  std::vector<Row> rows;
  enumerate_by_height(cfg, table, [&](const Row& r) { rows.push_back(r); });
  return rows;
}

std::vector<std::uint64_t> generate_smooth_numbers(std::uint64_t P, std::uint64_t limit, const PrimeTable& table) {
  std::vector<std::uint64_t> out;
  if (limit == 0) return out;
  std::uint64_t top = std::min(P, limit);
  if (top >= 2 && top > table.limit())
    throw CoverageError("smooth numbers: bound " + std::to_string(top) + " exceeds prime table limit " +
                        std::to_string(table.limit()));
  auto primes = table.primes().first(top < 2 ? 0 : table.count_upto(top));

  // Explicit stack of (value, index of the smallest prime still allowed).
  std::vector<std::pair<std::uint64_t, std::size_t>> stack{{1, 0}};
  while (!stack.empty()) {
    auto [v, i] = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (std::size_t j = i; j < primes.size(); ++j) {
      std::uint64_t p = primes[j];
      if (v > limit / p) break;
      stack.emplace_back(v * p, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SmoothScan enumerate_by_smoothness(std::uint64_t P, std::uint64_t height_cap, const PrimeTable& table) {
  SmoothScan scan{P, height_cap, true, {}};
  if (height_cap < 2 || P < 2) return scan;
  std::vector<std::uint64_t> smooth = generate_smooth_numbers(P, height_cap, table);
  std::unordered_set<std::uint64_t> members(smooth.begin(), smooth.end());
  std::uint64_t top = std::min(P, height_cap);
  PrimorialCache primorials(table, top);

  for (std::uint64_t h : smooth) {
    if (h < 2) continue;
    for (std::uint64_t a : smooth) {
      if (2 * a > h) break;
      if (std::gcd(a, h) != 1 || !members.contains(h - a)) continue;
      Triple t(a, h - a);
      Factorization f = abc_factorization(t, table);
      scan.rows.push_back({t, stats(t, f, primorials)});
    }
  }
  return scan;
}

namespace {

// An attainable insulator is odd, squarefree and built from primes below the cap.
bool attainable_insulator(const BigInt& target, std::uint64_t height_cap, const PrimeTable& table) {
  if (target < 1) return false;
  if (target == 1) return true;
  if (mpz_even_p(target.get_mpz_t())) return false;
  BigInt rest = target;
  for (std::uint32_t p : table.primes()) {
    if (p > height_cap) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) return false;
      if (rest == 1) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Row> find_by_insulator(const BigInt& target, std::uint64_t height_cap, const PrimeTable& table,
                                   unsigned threads) {
  std::vector<Row> found;
  if (!attainable_insulator(target, height_cap, table)) return found;
  HeightScanConfig cfg;
  cfg.height_bound = height_cap;
  cfg.inclusive = true;
  cfg.threads = threads;
  enumerate_by_height(cfg, table, [&](const Row& r) {
    if (r.stats.insulator == target) found.push_back(r);
  });
  return found;
}

void Spectrum::add(const Row& row) {
  auto [it, inserted] = buckets.try_emplace(row.stats.insulator);
  SpectrumBucket& b = it->second;
  if (inserted || row.stats.height < b.min_height) {
    b.min_height = row.stats.height;
    b.example = row.triple;
  }
  ++b.count;
}

std::uint64_t Spectrum::total() const {
  std::uint64_t n = 0;
  for (const auto& [value, b] : buckets) n += b.count;
  return n;
}

Spectrum insulator_spectrum(std::uint64_t height_bound, const PrimeTable& table, unsigned threads) {
  Spectrum spectrum;
  spectrum.height_bound = height_bound;
  HeightScanConfig cfg;
  cfg.height_bound = height_bound;
  cfg.threads = threads;
  enumerate_by_height(cfg, table, [&](const Row& r) { spectrum.add(r); });
  return spectrum;
}

std::string_view merit_name(Merit m) {
  switch (m) {
    case Merit::AbcQuality: return "quality";
    case Merit::XyzMerit: return "xyz";
    case Merit::WeakRatio: return "ratio";
    case Merit::InsulatorMinimality: return "insulator";
  }
  return "?";
}

std::optional<Merit> parse_merit(std::string_view name) {
  for (Merit m : {Merit::AbcQuality, Merit::XyzMerit, Merit::WeakRatio, Merit::InsulatorMinimality})
    if (merit_name(m) == name) return m;
  return std::nullopt;
}

double merit_value(const TripleStats& s, Merit m) {
  switch (m) {
    case Merit::AbcQuality: return s.abc_quality;
    case Merit::XyzMerit: return s.xyz_merit;
    case Merit::WeakRatio: return s.weak_ratio;
    case Merit::InsulatorMinimality: return -log_bigint(s.insulator);
  }
  return 0;
}

void RecordTracker::add(const Row& row) {
  double v = merit_value(row.stats, merit_);
  if (rows_.empty() || v > rows_.back().merit) rows_.push_back({seen_, row.triple, row.stats, v});
  ++seen_;
}

std::vector<ReportRow> records(std::span<const Row> stream, Merit merit) {
  RecordTracker tracker(merit);
  for (const Row& r : stream) tracker.add(r);
  return tracker.rows();
}

}  // namespace abcins
