#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "abcins/arith.hpp"
#include "abcins/enumeration.hpp"
#include "abcins/errors.hpp"
#include "abcins/factorization.hpp"
#include "abcins/report.hpp"
#include "abcins/verify.hpp"
#include "abcins/version.hpp"

namespace abcins::cli {

namespace {

constexpr std::uint64_t kMinSieve = 10'000;
constexpr std::uint64_t kMaxAutoSieve = 100'000'000;

struct Common {
  unsigned threads = 1;
  std::uint64_t sieve_limit = 0;  // 0 = auto
  std::string out_path;
  std::string format = "csv";
};

std::uint64_t sieve_for(const Common& c, std::uint64_t required) {
  return c.sieve_limit ? c.sieve_limit : std::max(required, kMinSieve);
}

// Output sink: --out file (relative paths resolved against $ABCINS_OUTPUT_DIR) or the given stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    std::filesystem::path p(path);
    if (p.is_relative()) {
      if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    file_ = std::make_unique<std::ofstream>(p, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open output file " + p.string());
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

RowWriter::Format row_format(const std::string& name) {
  return name == "jsonl" ? RowWriter::Format::Jsonl : RowWriter::Format::Csv;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void add_common(CLI::App* cmd, Common& c, bool rows) {
  cmd->add_option("--threads", c.threads, "Enumeration worker threads")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--sieve-limit", c.sieve_limit, "Override the automatically sized prime table");
  cmd->add_option("--out", c.out_path, "Write output to a file instead of stdout");
  if (rows) cmd->add_option("--format", c.format, "Row format")->check(CLI::IsMember({"csv", "jsonl"}));
}

int cmd_enumerate(const Common& c, std::optional<std::uint64_t> height, std::optional<std::uint64_t> smooth,
                  std::optional<std::uint64_t> cap, std::uint64_t chunk, std::ostream& out) {
  if (height && (smooth || cap)) throw InvalidArgument("--height cannot be combined with --smooth/--cap");
  if (!height && !(smooth && cap)) throw InvalidArgument("enumerate needs --height X or --smooth P --cap C");
  Output sink(c.out_path, out);
  if (height) {
    PrimeTable table(sieve_for(c, *height));
    HeightScanConfig cfg{*height, chunk, c.threads, false};
    RowWriter w(sink.stream(), row_format(c.format),
                {{"command", "enumerate"}, {"height_bound", std::to_string(*height)}, {"cap_limited", "false"}});
    enumerate_by_height(cfg, table, [&](const Row& r) { w.write(r); });
  } else {
    PrimeTable table(sieve_for(c, std::max<std::uint64_t>(*smooth, std::sqrt(double(*cap)) + 1)));
    SmoothScan scan = enumerate_by_smoothness(*smooth, *cap, table);
    RowWriter w(sink.stream(), row_format(c.format),
                {{"command", "enumerate"},
                 {"smoothness_bound", std::to_string(scan.smoothness_bound)},
                 {"height_cap", std::to_string(scan.height_cap)},
                 {"cap_limited", bool_str(scan.cap_limited)}});
    for (const Row& r : scan.rows) w.write(r);
  }
  return kExitOk;
}

int cmd_insulator(const Common& c, const std::string& value, std::optional<std::uint64_t> cap, bool spectrum,
                  std::optional<std::uint64_t> height, std::ostream& out) {
  Output sink(c.out_path, out);
  if (spectrum) {
    if (!height) throw InvalidArgument("--spectrum needs --height X");
    if (!value.empty() || cap) throw InvalidArgument("--spectrum cannot be combined with --value/--cap");
    PrimeTable table(sieve_for(c, *height));
    Spectrum s = insulator_spectrum(*height, table, c.threads);
    sink.stream() << metadata_line({{"command", "insulator"}, {"spectrum", "true"},
                                    {"height_bound", std::to_string(*height)}})
                  << '\n'
                  << spectrum_json(s).dump() << '\n';
    return kExitOk;
  }
  if (value.empty() || !cap) throw InvalidArgument("insulator needs --value I --cap C or --spectrum --height X");
  BigInt target;
  if (target.set_str(value, 10) != 0 || target < 1)
    throw InvalidArgument("--value must be a positive decimal integer");
  PrimeTable table(sieve_for(c, *cap));
  std::vector<Row> rows = find_by_insulator(target, *cap, table, c.threads);
  RowWriter w(sink.stream(), row_format(c.format),
              {{"command", "insulator"}, {"value", value}, {"height_cap", std::to_string(*cap)}});
  for (const Row& r : rows) w.write(r);
  return kExitOk;
}

int cmd_records(const Common& c, std::uint64_t height, const std::string& merit_name_arg, std::ostream& out) {
  Merit merit = *parse_merit(merit_name_arg);
  PrimeTable table(sieve_for(c, height));
  RecordTracker tracker(merit);
  HeightScanConfig cfg{height, 16, c.threads, false};
  enumerate_by_height(cfg, table, [&](const Row& r) { tracker.add(r); });
  Output sink(c.out_path, out);
  RowWriter w(sink.stream(), row_format(c.format),
              {{"command", "records"}, {"height_bound", std::to_string(height)}, {"merit", merit_name_arg}});
  for (const ReportRow& r : tracker.rows()) w.write(r.triple, r.stats);
  return kExitOk;
}

struct VerifyArgs {
  std::string check;
  std::uint64_t height = 1000;
  std::uint64_t limit = 1'000'000;
  double alpha = 0.6;
  double beta = 1.5;
  std::string max_insulator;
  std::uint64_t min_smoothness = 0;
};

int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  VerificationReport report;
  Metadata meta{{"command", "verify"}, {"check", v.check}};
  if (v.check == "theta") {
    PrimeTable table(sieve_for(c, v.limit));
    report = theta_report(v.limit, table);
    meta.emplace_back("limit", std::to_string(v.limit));
  } else {
    // Validate parameters before the scan.
    std::optional<SandwichChecker> sandwich;
    if (v.check == "sandwich") sandwich.emplace(v.alpha, v.beta);
    std::optional<BigInt> max_ins;
    if (!v.max_insulator.empty()) {
      max_ins.emplace();
      if (max_ins->set_str(v.max_insulator, 10) != 0) throw InvalidArgument("--max-insulator must be an integer");
    }
    Eq2Checker eq2;
    HeightRadChecker hr;
    PrimeTable table(sieve_for(c, v.height));
    HeightScanConfig cfg{v.height, 16, c.threads, false};
    enumerate_by_height(cfg, table, [&](const Row& r) {
      if (max_ins && r.stats.insulator > *max_ins) return;
      if (r.stats.smoothness < v.min_smoothness) return;
      if (v.check == "eq2")
        eq2.add(r);
      else if (v.check == "heightrad")
        hr.add(r);
      else
        sandwich->add(r);
    });
    report = v.check == "eq2" ? eq2.report() : v.check == "heightrad" ? hr.report() : sandwich->report();
    meta.emplace_back("height_bound", std::to_string(v.height));
    if (max_ins) meta.emplace_back("max_insulator", v.max_insulator);
    if (v.min_smoothness) meta.emplace_back("min_smoothness", std::to_string(v.min_smoothness));
  }
  Output sink(c.out_path, out);
  sink.stream() << metadata_line(meta) << '\n' << report_json(report).dump() << '\n';
  return report.passed() ? kExitOk : kExitRuntime;
}

int cmd_eval(const Common& c, std::int64_t n, bool json, std::ostream& out) {
  if (n == 0) throw InvalidArgument("--n must be nonzero");
  std::uint64_t mag = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(mag))) + 1;
  std::uint64_t want = mag <= kMaxAutoSieve ? mag : root;
  auto table = std::make_unique<PrimeTable>(sieve_for(c, want));
  Factorization f = factorize(n, *table);
  std::uint64_t top = largest_prime(f);
  if (top > table->limit()) {
    if (c.sieve_limit || top > kMaxAutoSieve)
      throw CoverageError("P+ = " + std::to_string(top) + " exceeds the prime table; the insulator needs every prime up to P+ (pass a larger --sieve-limit)");
    table = std::make_unique<PrimeTable>(top);
  }
  BigInt rad = radical(f);
  BigInt prim = primorial(top, *table);
  bool insulated = is_insulated(f, *table);
  BigInt ins = insulator(f, *table);

  Output sink(c.out_path, out);
  std::ostream& o = sink.stream();
  o << metadata_line({{"command", "eval"}, {"n", std::to_string(n)}}) << '\n';
  if (json) {
    nlohmann::ordered_json j = {{"n", n},
                                {"factorization", f.to_string()},
                                {"rad", to_decimal(rad)},
                                {"P+", top},
                                {"primorial", to_decimal(prim)},
                                {"insulated", insulated},
                                {"insulator", to_decimal(ins)}};
    o << j.dump() << '\n';
  } else {
    o << "n: " << n << '\n'
      << "factorization: " << f.to_string() << '\n'
      << "rad: " << to_decimal(rad) << '\n'
      << "P+: " << top << '\n'
      << "primorial(P+): " << to_decimal(prim) << '\n'
      << "insulated: " << bool_str(insulated) << '\n'
      << "insulator: " << to_decimal(ins) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Insulators, heights and conductors of primitive solutions of A + B + C = 0", "abcins"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;

  auto* enumerate = app.add_subcommand("enumerate", "List canonical triples by height or smoothness");
  std::optional<std::uint64_t> height, smooth, cap;
  std::uint64_t chunk = 16;
  enumerate->add_option("--height", height, "Strict height bound X (H < X)");
  enumerate->add_option("--smooth", smooth, "Smoothness bound P (S <= P)");
  enumerate->add_option("--cap", cap, "Height cap for --smooth (H <= C)");
  enumerate->add_option("--chunk", chunk, "Heights per parallel work unit")->check(CLI::PositiveNumber);
  add_common(enumerate, common, true);

  auto* ins = app.add_subcommand("insulator", "Find triples with a given insulator, or the insulator spectrum");
  std::string value;
  bool spectrum = false;
  std::optional<std::uint64_t> ins_cap, ins_height;
  ins->add_option("--value", value, "Target insulator value");
  ins->add_option("--cap", ins_cap, "Height cap (H <= C)");
  ins->add_flag("--spectrum", spectrum, "Histogram of insulator values");
  ins->add_option("--height", ins_height, "Strict height bound for --spectrum");
  add_common(ins, common, true);

  auto* rec = app.add_subcommand("records", "Record-setting triples for a merit, in height order");
  std::uint64_t rec_height = 0;
  std::string merit = "quality";
  rec->add_option("--height", rec_height, "Strict height bound X")->required();
  rec->add_option("--merit", merit, "Merit")->check(CLI::IsMember({"quality", "xyz", "ratio", "insulator"}));
  add_common(rec, common, true);

  auto* ver = app.add_subcommand("verify", "Check inequalities over enumerated triples or theta ratios");
  VerifyArgs v;
  ver->add_option("--check", v.check, "Which check")
      ->required()
      ->check(CLI::IsMember({"eq2", "heightrad", "sandwich", "theta"}));
  ver->add_option("--height", v.height, "Strict height bound for triple checks");
  ver->add_option("--limit", v.limit, "Upper end of the theta scan");
  ver->add_option("--alpha", v.alpha, "Sandwich lower constant, 0 < alpha < log 2");
  ver->add_option("--beta", v.beta, "Sandwich upper constant, beta > log 4");
  ver->add_option("--max-insulator", v.max_insulator, "Only triples with I <= this value");
  ver->add_option("--min-smoothness", v.min_smoothness, "Only triples with S >= this value");
  add_common(ver, common, false);

  auto* ev = app.add_subcommand("eval", "Arithmetic report for one integer");
  std::int64_t n = 0;
  bool json = false;
  ev->add_option("--n", n, "Nonzero integer")->required()->allow_extra_args(false);
  ev->add_flag("--json", json, "JSON output");
  add_common(ev, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(common, height, smooth, cap, chunk, out);
    if (ins->parsed()) return cmd_insulator(common, value, ins_cap, spectrum, ins_height, out);
    if (rec->parsed()) return cmd_records(common, rec_height, merit, out);
    if (ver->parsed()) return cmd_verify(common, v, out);
    if (ev->parsed()) return cmd_eval(common, n, json, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace abcins::cli
