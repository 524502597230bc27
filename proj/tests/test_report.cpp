#include <doctest.h>

#include <sstream>

#include "abcins/report.hpp"
#include "abcins/version.hpp"

using namespace abcins;

namespace {
const PrimeTable& table() {
  static const PrimeTable t(10'000);
  return t;
}
}  // namespace

TEST_CASE("csv rows") {
  Triple t(1, 8);
  std::string line = csv_row(t, stats(t, table()));
  CHECK(line.rfind("1,8,-9,9,6,3,1,", 0) == 0);
  std::stringstream ss;
  RowWriter w(ss, RowWriter::Format::Csv, {{"command", "test"}});
  w.write(Triple(1, 1), stats(Triple(1, 1), table()));
  std::string meta, header, row;
  std::getline(ss, meta);
  std::getline(ss, header);
  std::getline(ss, row);
  CHECK(meta == std::string("# abcins ") + kVersion + " command=test");
  CHECK(header == "a,b,c,H,N,S,I,quality,merit,ratio");
  CHECK(row.rfind("1,1,-2,2,2,2,1,1,", 0) == 0);
  CHECK(w.count() == 1);
}

TEST_CASE("doubles round trip") {
  for (double v : {1.2262943855309173, 0.1, 1e-300, 123456.789}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("json rows keep big integers exact") {
  Triple t(1, 4);
  auto j = row_json(t, stats(t, table()));
  CHECK(j["a"] == 1);
  CHECK(j["c"] == -5);
  CHECK(j["N"] == "10");
  CHECK(j["I"] == "3");
  CHECK(j.size() == 10);

  // A prime height gives an insulator far beyond 64 bits.
  Triple big(1, 9972);
  auto jb = row_json(big, stats(big, table()));
  CHECK(jb["I"].get<std::string>().size() > 40);
}

TEST_CASE("spectrum and report json") {
  Spectrum s;
  s.height_bound = 3;
  s.add({Triple(1, 1), stats(Triple(1, 1), table())});
  auto j = spectrum_json(s);
  CHECK(j["total"] == 1);
  CHECK(j["buckets"]["1"]["count"] == 1);
  CHECK(j["buckets"]["1"]["min_height"] == 2);

  VerificationReport r{"eq2"};
  r.failures.push_back({Triple(1, 8), 3, "x"});
  auto rj = report_json(r);
  CHECK(rj["check"] == "eq2");
  CHECK(rj["passed"] == false);
  CHECK(rj["failures"][0]["triple"][2] == -9);
  CHECK(rj["threshold"].is_null());
}
