#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "abcins/bigint.hpp"
#include "abcins/prime_table.hpp"
#include "abcins/triple.hpp"

namespace abcins {

struct Row {
  Triple triple;
  TripleStats stats;
};

using RowSink = std::function<void(const Row&)>;

/// Scan of all canonical triples with height below height_bound (or at most
/// height_bound when inclusive is set).
struct HeightScanConfig {
  std::uint64_t height_bound = 3;
  std::uint64_t chunk = 16;  // heights per work unit
  unsigned threads = 1;
  bool inclusive = false;
};

/// Emits every canonical triple of the configured height range exactly once,
/// ordered by (a + b, a). Work is split into height chunks processed by
/// `threads` workers; chunks are handed to the sink in order, so the output
/// does not depend on the thread count. Requires table.limit() >= largest height.
void enumerate_by_height(const HeightScanConfig& cfg, const PrimeTable& table, const RowSink& sink);

std::vector<Row> collect_by_height(const HeightScanConfig& cfg, const PrimeTable& table);

/// All integers in [1, limit] whose prime factors are <= P, ascending.
/// Built by depth-first product enumeration over the primes <= P.
std::vector<std::uint64_t> generate_smooth_numbers(std::uint64_t P, std::uint64_t limit, const PrimeTable& table);

struct SmoothScan {
  std::uint64_t smoothness_bound;
  std::uint64_t height_cap;
  // Always set: the set of triples with S <= P is finite, but this scan only
  // proves completeness below height_cap.
  bool cap_limited = true;
  std::vector<Row> rows;
};

/// Every canonical triple with S <= P and H <= height_cap, ordered by (a + b, a).
SmoothScan enumerate_by_smoothness(std::uint64_t P, std::uint64_t height_cap, const PrimeTable& table);

/// Every canonical triple with H <= height_cap and insulator equal to target.
/// Even or non-squarefree targets return empty immediately: ABC is always
/// even, and insulators are squarefree.
std::vector<Row> find_by_insulator(const BigInt& target, std::uint64_t height_cap, const PrimeTable& table,
                                   unsigned threads = 1);

struct SpectrumBucket {
  std::uint64_t count = 0;
  std::uint64_t min_height = 0;
  Triple example{1, 1};
};

/// Histogram of insulator values over a height range.
struct Spectrum {
  std::uint64_t height_bound = 0;
  std::map<BigInt, SpectrumBucket> buckets;

  void add(const Row& row);
  std::uint64_t total() const;
};

Spectrum insulator_spectrum(std::uint64_t height_bound, const PrimeTable& table, unsigned threads = 1);

enum class Merit { AbcQuality, XyzMerit, WeakRatio, InsulatorMinimality };

std::string_view merit_name(Merit m);
std::optional<Merit> parse_merit(std::string_view name);

/// Scalar compared by the record tracker. InsulatorMinimality uses -log I,
/// so a record is a strictly smaller insulator.
double merit_value(const TripleStats& s, Merit m);

struct ReportRow {
  std::uint64_t index;  // position in the input stream
  Triple triple;
  TripleStats stats;
  double merit;
};

/// Keeps the triples whose merit strictly exceeds that of every earlier triple.
class RecordTracker {
 public:
  explicit RecordTracker(Merit merit) : merit_(merit) {}

  void add(const Row& row);
  const std::vector<ReportRow>& rows() const noexcept { return rows_; }
  Merit merit() const noexcept { return merit_; }

 private:
  Merit merit_;
  std::uint64_t seen_ = 0;
  std::vector<ReportRow> rows_;
};

std::vector<ReportRow> records(std::span<const Row> stream, Merit merit);

}  // namespace abcins
