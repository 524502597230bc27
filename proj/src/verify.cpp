#include "abcins/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "abcins/errors.hpp"

namespace abcins {

bool strictly_less(double x, double y) { return y - x > kStrictSlack * std::max(1.0, std::fabs(y)); }

namespace {

void note_range(VerificationReport& r, std::uint64_t h) {
  if (r.checked == 0 || h < r.range_lo) r.range_lo = h;
  r.range_hi = std::max(r.range_hi, h);
  ++r.checked;
}

}  // namespace

void Eq2Checker::add(const Row& row) {
  const TripleStats& s = row.stats;
  note_range(report_, s.height);
  BigInt S = to_bigint(s.smoothness);
  if (s.smoothness > s.height || S > s.conductor) {
    report_.failures.push_back({row.triple, s.smoothness,
                                "S=" + std::to_string(s.smoothness) + " exceeds min(H=" + std::to_string(s.height) +
                                    ", N=" + to_decimal(s.conductor) + ")"});
  }
}

VerificationReport Eq2Checker::report() const { return report_; }

void HeightRadChecker::add(const Row& row) {
  const TripleStats& s = row.stats;
  note_range(report_, s.height);
  BigInt h = to_bigint(s.height);
  BigInt cube = h * h * h;
  if (cube < s.conductor) {
    report_.failures.push_back(
        {row.triple, s.smoothness, "H^3=" + to_decimal(cube) + " < N=" + to_decimal(s.conductor)});
  }
}

VerificationReport HeightRadChecker::report() const { return report_; }

SandwichChecker::SandwichChecker(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  const double ln2 = std::numbers::ln2;
  if (!(alpha > 0 && alpha < ln2))
    throw InvalidArgument("sandwich check requires 0 < alpha < log 2, got alpha=" + std::to_string(alpha));
  if (!(beta > 2 * ln2))
    throw InvalidArgument("sandwich check requires beta > log 4, got beta=" + std::to_string(beta));
  report_.parameters = {{"alpha", alpha}, {"beta", beta}};
}

void SandwichChecker::add(const Row& row) {
  const TripleStats& s = row.stats;
  note_range(report_, s.height);
  double p = static_cast<double>(s.smoothness);
  double log_rad = log_bigint(s.conductor);
  std::string detail;
  if (!strictly_less(alpha_ * p, log_rad)) detail = "lower: alpha*P+ >= log rad";
  if (!strictly_less(log_rad, beta_ * p)) detail += detail.empty() ? "upper: log rad >= beta*P+" : "; upper";
  if (detail.empty()) return;
  report_.failures.push_back({row.triple, s.smoothness, detail});
  report_.threshold = std::max(report_.threshold.value_or(0), s.smoothness);
}

VerificationReport SandwichChecker::report() const {
  VerificationReport r = report_;
  if (!r.threshold) r.threshold = 0;
  return r;
}

VerificationReport check_eq2(std::span<const Row> rows) {
  Eq2Checker c;
  for (const Row& r : rows) c.add(r);
  return c.report();
}

VerificationReport check_height_rad(std::span<const Row> rows) {
  HeightRadChecker c;
  for (const Row& r : rows) c.add(r);
  return c.report();
}

VerificationReport check_sandwich(double alpha, double beta, std::span<const Row> rows) {
  SandwichChecker c(alpha, beta);
  for (const Row& r : rows) c.add(r);
  return c.report();
}

std::vector<double> theta_prefix(std::uint64_t limit, const PrimeTable& table) {
  if (limit > table.limit())
    throw CoverageError("theta scan up to " + std::to_string(limit) + " exceeds prime table limit " +
                        std::to_string(table.limit()));
  std::vector<double> theta(limit + 1, 0.0);
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint64_t x = 2; x <= limit; ++x) {
    if (table.is_prime(x)) {
      double term = std::log(static_cast<double>(x));
      double t = sum + term;
      if (std::fabs(sum) >= std::fabs(term))
        comp += (sum - t) + term;
      else
        comp += (term - t) + sum;
      sum = t;
    }
    theta[x] = sum + comp;
  }
  return theta;
}

ThetaThresholds theta_ratio_threshold(std::uint64_t limit, const PrimeTable& table) {
  if (limit < 1) throw InvalidArgument("theta threshold limit must be >= 1");
  std::vector<double> theta = theta_prefix(limit, table);
  const double ln2 = std::numbers::ln2;
  const double ln4 = 2 * ln2;
  ThetaThresholds t{limit + 1, limit + 1};
  bool lower_open = true;
  bool upper_open = true;
  for (std::uint64_t x = limit; x >= 1 && (lower_open || upper_open); --x) {
    double ratio = theta[x] / static_cast<double>(x);
    if (lower_open) {
      if (strictly_less(ln2, ratio))
        t.x0_lower = x;
      else
        lower_open = false;
    }
    if (upper_open) {
      if (strictly_less(ratio, ln4))
        t.x0_upper = x;
      else
        upper_open = false;
    }
  }
  return t;
}

VerificationReport theta_report(std::uint64_t limit, const PrimeTable& table) {
  ThetaThresholds t = theta_ratio_threshold(limit, table);
  VerificationReport r{"theta"};
  r.range_lo = 1;
  r.range_hi = limit;
  r.checked = limit;
  r.threshold = t.x0_lower;
  r.parameters = {{"x0_lower", static_cast<double>(t.x0_lower)}, {"x0_upper", static_cast<double>(t.x0_upper)}};
  // Bounds that must hold everywhere in the range: theta(x) < x log 4.
  if (t.x0_upper != 1)
    r.failures.push_back({std::nullopt, t.x0_upper - 1, "theta(x)/x >= log 4"});
  return r;
}

}  // namespace abcins
