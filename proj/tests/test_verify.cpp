#include <doctest.h>

#include <cmath>
#include <numbers>

#include "abcins/arith.hpp"
#include "abcins/errors.hpp"
#include "abcins/verify.hpp"

using namespace abcins;

namespace {
const PrimeTable& table() {
  static const PrimeTable t(1'000'000);
  return t;
}

Row row_of(std::uint64_t a, std::uint64_t b) {
  Triple t(a, b);
  return {t, stats(t, table())};
}
}  // namespace

TEST_CASE("eq2 and height-rad on single triples") {
  std::vector<Row> rows{row_of(1, 8), row_of(1, 1), row_of(1, 4)};
  auto eq2 = check_eq2(rows);
  CHECK(eq2.passed());
  CHECK(eq2.checked == 3);
  CHECK(eq2.range_lo == 2);
  CHECK(eq2.range_hi == 9);
  CHECK(check_height_rad(rows).passed());
}

TEST_CASE("checkers catch corrupted stats") {
  Row bad = row_of(1, 8);
  bad.stats.smoothness = 7;
  CHECK_FALSE(check_eq2(std::vector<Row>{bad}).passed());
  bad = row_of(1, 8);
  bad.stats.conductor = 1000;
  auto r = check_height_rad(std::vector<Row>{bad});
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].triple == Triple(1, 8));
}

TEST_CASE("zero failures over H <= 1000") {
  auto rows = collect_by_height({1001, 16, 1, false}, table());
  CHECK(check_eq2(rows).passed());
  CHECK(check_height_rad(rows).passed());
}

TEST_CASE("sandwich parameter domain") {
  const double ln2 = std::numbers::ln2;
  CHECK_THROWS_AS(SandwichChecker(ln2, 1.5), InvalidArgument);
  CHECK_THROWS_AS(SandwichChecker(0.0, 1.5), InvalidArgument);
  CHECK_THROWS_AS(SandwichChecker(0.5, 2 * ln2), InvalidArgument);
  CHECK_THROWS_WITH(SandwichChecker(0.7, 1.5), doctest::Contains("log 2"));
  CHECK_NOTHROW(SandwichChecker(0.6, 1.5));
}

TEST_CASE("sandwich on (1,1) fails the lower side") {
  auto r = check_sandwich(0.6, 1.5, std::vector<Row>{row_of(1, 1)});
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].at == 2);
  CHECK(r.failures[0].detail.find("lower") != std::string::npos);
  CHECK(r.threshold == 2u);
}

TEST_CASE("sandwich on insulated triples up to 10^4") {
  std::vector<Row> insulated;
  enumerate_by_height({10'001, 64, 1, false}, table(), [&](const Row& r) {
    if (r.stats.insulator == 1) insulated.push_back(r);
  });
  REQUIRE(!insulated.empty());
  auto r = check_sandwich(0.6, 1.5, insulated);
  for (const Failure& f : r.failures) REQUIRE(f.detail.find("upper") == std::string::npos);
  REQUIRE(r.threshold.has_value());
  // Self-consistency: nothing above the threshold fails.
  std::vector<Row> above;
  for (const Row& row : insulated)
    if (row.stats.smoothness > *r.threshold) above.push_back(row);
  CHECK(check_sandwich(0.6, 1.5, above).passed());
  MESSAGE("sandwich threshold for I = 1, H <= 10^4: " << *r.threshold);
}

TEST_CASE("theta ratios") {
  const auto& t = table();
  const double ln2 = std::numbers::ln2;
  CHECK(chebyshev_theta(11, t) == doctest::Approx(std::log(2310.0)).epsilon(1e-14));
  CHECK(chebyshev_theta(11, t) / 11 > ln2);
  CHECK(chebyshev_theta(12, t) / 12 < ln2);

  auto prefix = theta_prefix(5000, t);
  for (std::uint64_t x = 0; x <= 5000; ++x) REQUIRE(prefix[x] == chebyshev_theta(double(x), t));

  ThetaThresholds th = theta_ratio_threshold(1'000'000, t);
  CHECK(th.x0_upper == 1);
  CHECK(th.x0_lower == 29);
  CHECK(th.x0_lower > 12);
  ThetaThresholds again = theta_ratio_threshold(1'000'000, t);
  CHECK(again.x0_lower == th.x0_lower);
  CHECK(again.x0_upper == th.x0_upper);

  // Enlarging the limit never lowers x0_lower.
  std::uint64_t prev = 0;
  for (std::uint64_t limit : {10u, 20u, 28u, 29u, 50u, 1000u, 100000u}) {
    auto cur = theta_ratio_threshold(limit, t).x0_lower;
    REQUIRE(cur >= prev);
    prev = cur;
  }
  CHECK(theta_ratio_threshold(28, t).x0_lower == 29);  // fails at the limit itself

  CHECK(theta_report(100'000, t).passed());
}
