#include "abcins/report.hpp"

#include <charconv>
#include <cmath>

#include "abcins/version.hpp"

namespace abcins {

std::string metadata_line(const Metadata& meta) {
  std::string s = std::string("# abcins ") + kVersion;
  for (const auto& [k, v] : meta) s += " " + k + "=" + v;
  return s;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_row(const Triple& t, const TripleStats& s) {
  std::string line;
  line.reserve(64);
  line += std::to_string(t.a());
  line += ',';
  line += std::to_string(t.b());
  line += ',';
  line += std::to_string(t.c());
  line += ',';
  line += std::to_string(s.height);
  line += ',';
  line += to_decimal(s.conductor);
  line += ',';
  line += std::to_string(s.smoothness);
  line += ',';
  line += to_decimal(s.insulator);
  line += ',';
  line += format_double(s.abc_quality);
  line += ',';
  line += format_double(s.xyz_merit);
  line += ',';
  line += format_double(s.weak_ratio);
  return line;
}

nlohmann::ordered_json row_json(const Triple& t, const TripleStats& s) {
  return {{"a", t.a()},
          {"b", t.b()},
          {"c", t.c()},
          {"H", s.height},
          {"N", to_decimal(s.conductor)},
          {"S", s.smoothness},
          {"I", to_decimal(s.insulator)},
          {"quality", s.abc_quality},
          {"merit", s.xyz_merit},
          {"ratio", s.weak_ratio}};
}

nlohmann::ordered_json spectrum_json(const Spectrum& spectrum) {
  nlohmann::ordered_json buckets = nlohmann::ordered_json::object();
  for (const auto& [value, b] : spectrum.buckets) {
    buckets[to_decimal(value)] = {{"count", b.count},
                                  {"min_height", b.min_height},
                                  {"example", {b.example.a(), b.example.b(), b.example.c()}}};
  }
  return {{"height_bound", spectrum.height_bound}, {"total", spectrum.total()}, {"buckets", std::move(buckets)}};
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const Failure& f : report.failures) {
    nlohmann::ordered_json j = {{"at", f.at}, {"detail", f.detail}};
    if (f.triple) j["triple"] = {f.triple->a(), f.triple->b(), f.triple->c()};
    failures.push_back(std::move(j));
  }
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  nlohmann::ordered_json j = {{"check", report.check},
                              {"range", {report.range_lo, report.range_hi}},
                              {"checked", report.checked},
                              {"failures", std::move(failures)},
                              {"threshold", nullptr},
                              {"parameters", std::move(params)},
                              {"passed", report.passed()}};
  if (report.threshold) j["threshold"] = *report.threshold;
  return j;
}

nlohmann::ordered_json records_json(const std::vector<ReportRow>& rows, Merit merit) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json j = row_json(r.triple, r.stats);
    j["index"] = r.index;
    j["record"] = r.merit;
    arr.push_back(std::move(j));
  }
  return {{"merit", std::string(merit_name(merit))}, {"records", std::move(arr)}};
}

RowWriter::RowWriter(std::ostream& out, Format format, const Metadata& meta) : out_(out), format_(format) {
  out_ << metadata_line(meta) << '\n';
  if (format_ == Format::Csv) out_ << kCsvHeader << '\n';
}

void RowWriter::write(const Triple& t, const TripleStats& s) {
  if (format_ == Format::Csv)
    out_ << csv_row(t, s) << '\n';
  else
    out_ << row_json(t, s).dump() << '\n';
  ++count_;
}

}  // namespace abcins
