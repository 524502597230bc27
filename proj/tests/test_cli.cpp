#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using abcins::cli::run;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result exec(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}
}  // namespace

TEST_CASE("eval") {
  auto r = exec({"eval", "--n", "256256"});
  CHECK(r.code == 0);
  CHECK(r.out.find("insulator: 15\n") != std::string::npos);
  CHECK(r.out.find("factorization: +2^8 * 7 * 11 * 13\n") != std::string::npos);
  CHECK(r.out.find("rad: 2002\n") != std::string::npos);
  CHECK(r.out.find("primorial(P+): 30030\n") != std::string::npos);

  auto thirty = exec({"eval", "--n", "30"});
  CHECK(thirty.out.find("insulated: true\n") != std::string::npos);
  CHECK(thirty.out.find("insulator: 1\n") != std::string::npos);

  auto neg = exec({"eval", "--n=-72", "--json"});
  REQUIRE(neg.code == 0);
  auto j = nlohmann::json::parse(lines(neg.out).at(1));
  CHECK(j["rad"] == "6");
  CHECK(j["P+"] == 3);
  CHECK(j["insulator"] == "1");

  auto neg2 = exec({"eval", "--n", "-72"});
  CHECK(neg2.code == 0);
  CHECK(neg2.out.find("rad: 6\n") != std::string::npos);

  auto prime = exec({"eval", "--n", "99991"});
  CHECK(prime.code == 0);
  CHECK(prime.out.find("P+: 99991\n") != std::string::npos);
  auto huge = exec({"eval", "--n", "2000000014"});  // 2 * 1000000007
  CHECK(huge.code == 1);
  CHECK(huge.err.find("--sieve-limit") != std::string::npos);

  CHECK(exec({"eval", "--n", "0"}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = exec({"enumerate", "--height", "3"});
  REQUIRE(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0].rfind("# abcins ", 0) == 0);
  CHECK(l[1] == "a,b,c,H,N,S,I,quality,merit,ratio");
  CHECK(l[2].rfind("1,1,-2,", 0) == 0);

  auto s = exec({"enumerate", "--smooth", "2", "--cap", "1000"});
  REQUIRE(s.code == 0);
  auto sl = lines(s.out);
  CHECK(sl.size() == 3);
  CHECK(sl[0].find("cap_limited=true") != std::string::npos);

  auto js = exec({"enumerate", "--height", "100", "--format", "jsonl"});
  REQUIRE(js.code == 0);
  auto jl = lines(js.out);
  CHECK(jl.size() == 1 + 1502);
  CHECK(nlohmann::json::parse(jl[1])["H"] == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(exec({}).code == 2);
  CHECK(exec({"enumerate"}).code == 2);
  CHECK(exec({"enumerate", "--height", "10", "--smooth", "3"}).code == 2);
  CHECK(exec({"enumerate", "--height", "abc"}).code == 2);
  CHECK(exec({"records", "--height", "10", "--merit", "bogus"}).code == 2);
  CHECK(exec({"verify", "--check", "sandwich", "--alpha", "0.7", "--height", "10"}).code == 2);
  CHECK(exec({"verify", "--check", "sandwich", "--alpha", "0.5", "--beta", "1.3", "--height", "10"}).code == 2);
  CHECK(exec({"insulator", "--value", "x", "--cap", "10"}).code == 2);
}

TEST_CASE("runtime errors exit 1") {
  CHECK(exec({"enumerate", "--height", "1000", "--sieve-limit", "100"}).code == 1);
  CHECK(exec({"enumerate", "--height", "10", "--out", "/nonexistent-dir/x.csv"}).code == 1);
}

TEST_CASE("insulator command") {
  auto r = exec({"insulator", "--value", "1", "--cap", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n1,1,-2,") != std::string::npos);

  auto none = exec({"insulator", "--value", "2", "--cap", "100"});
  CHECK(none.code == 0);
  CHECK(lines(none.out).size() == 2);

  auto sp = exec({"insulator", "--spectrum", "--height", "1000"});
  REQUIRE(sp.code == 0);
  auto j = nlohmann::json::parse(lines(sp.out).at(1));
  std::uint64_t sum = 0;
  for (auto& [k, v] : j["buckets"].items()) sum += v["count"].get<std::uint64_t>();
  CHECK(sum == j["total"].get<std::uint64_t>());
  CHECK(sum == 151896);
}

TEST_CASE("records command") {
  auto r = exec({"records", "--height", "10", "--merit", "quality"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).at(2).rfind("1,1,-2,", 0) == 0);

  auto x = exec({"records", "--height", "1000", "--merit", "xyz", "--format", "jsonl"});
  REQUIRE(x.code == 0);
  auto l = lines(x.out);
  double prev = -1;
  for (std::size_t i = 1; i < l.size(); ++i) {
    double m = nlohmann::json::parse(l[i])["merit"].get<double>();
    REQUIRE(m > prev);
    prev = m;
  }
  auto q = exec({"records", "--height", "1000", "--merit", "quality"});
  CHECK(lines(q.out).back().rfind("3,125,-128,", 0) == 0);
}

TEST_CASE("verify command") {
  auto eq2 = exec({"verify", "--check", "eq2", "--height", "1000"});
  CHECK(eq2.code == 0);
  auto j = nlohmann::json::parse(lines(eq2.out).at(1));
  CHECK(j["passed"] == true);
  CHECK(j["checked"] == 151896);

  CHECK(exec({"verify", "--check", "heightrad", "--height", "500"}).code == 0);

  auto theta = exec({"verify", "--check", "theta", "--limit", "100000"});
  CHECK(theta.code == 0);
  auto tj = nlohmann::json::parse(lines(theta.out).at(1));
  CHECK(tj["parameters"]["x0_lower"] == 29);
  CHECK(tj["parameters"]["x0_upper"] == 1);

  auto sw = exec({"verify", "--check", "sandwich", "--height", "200", "--max-insulator", "1"});
  CHECK(sw.code == 1);  // small P+ failures are reported
  auto sj = nlohmann::json::parse(lines(sw.out).at(1));
  auto thr = sj["threshold"].get<std::uint64_t>();
  auto above = exec({"verify", "--check", "sandwich", "--height", "200", "--max-insulator", "1", "--min-smoothness",
                     std::to_string(thr + 1)});
  CHECK(above.code == 0);
}

TEST_CASE("output directory from environment") {
  auto dir = std::filesystem::temp_directory_path() / "abcins_cli_test";
  std::filesystem::create_directories(dir);
  setenv(abcins::cli::kOutputDirEnv, dir.c_str(), 1);
  auto r = exec({"enumerate", "--height", "6", "--out", "six.csv"});
  unsetenv(abcins::cli::kOutputDirEnv);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "six.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(lines(ss.str()).size() == 2 + 5);
  std::filesystem::remove_all(dir);
}
