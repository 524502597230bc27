#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abcins/enumeration.hpp"
#include "abcins/prime_table.hpp"

namespace abcins {

// Real-valued strict inequalities x < y are only accepted when y - x exceeds
// this relative slack; integer inequalities are checked exactly.
inline constexpr double kStrictSlack = 1e-12;

bool strictly_less(double x, double y);

struct Failure {
  std::optional<Triple> triple;
  std::uint64_t at = 0;  // P+ for triple checks, x for theta checks
  std::string detail;
};

struct VerificationReport {
  VerificationReport() = default;
  explicit VerificationReport(std::string name) : check(std::move(name)) {}

  std::string check;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::optional<std::uint64_t> threshold;
  std::map<std::string, double> parameters;

  bool passed() const noexcept { return failures.empty(); }
};

/// S <= min(H, N) for every triple, compared exactly.
class Eq2Checker {
 public:
  void add(const Row& row);
  VerificationReport report() const;

 private:
  VerificationReport report_{"eq2"};
};

/// H^3 >= N for every triple (log H >= log rad(ABC) / 3), compared exactly.
class HeightRadChecker {
 public:
  void add(const Row& row);
  VerificationReport report() const;

 private:
  VerificationReport report_{"heightrad"};
};

/// Tests alpha P+(n) < log rad(n) < beta P+(n) with n = ABC.
///
/// The inequality is only claimed for k large along sequences with bounded
/// insulator, so failures are expected at small P+. The report's threshold is
/// the largest P+ at which either side failed; every triple seen with a larger
/// P+ satisfied both sides.
class SandwichChecker {
 public:
  /// Requires 0 < alpha < log 2 and beta > log 4; throws InvalidArgument otherwise.
  SandwichChecker(double alpha, double beta);

  void add(const Row& row);
  VerificationReport report() const;

 private:
  double alpha_;
  double beta_;
  VerificationReport report_{"sandwich"};
};

VerificationReport check_eq2(std::span<const Row> rows);
VerificationReport check_height_rad(std::span<const Row> rows);
VerificationReport check_sandwich(double alpha, double beta, std::span<const Row> rows);

struct ThetaThresholds {
  std::uint64_t x0_lower;  // theta(x)/x > log 2 for all integers x in [x0_lower, limit]
  std::uint64_t x0_upper;  // theta(x)/x < log 4 for all integers x in [x0_upper, limit]
};

/// Descending scan over integers x in [1, limit]. A threshold of limit + 1 means
/// the ratio condition fails at limit itself.
ThetaThresholds theta_ratio_threshold(std::uint64_t limit, const PrimeTable& table);

/// theta(x) for every integer 0 <= x <= limit, accumulated in ascending prime
/// order with compensated summation (same order as chebyshev_theta).
std::vector<double> theta_prefix(std::uint64_t limit, const PrimeTable& table);

VerificationReport theta_report(std::uint64_t limit, const PrimeTable& table);

}  // namespace abcins
