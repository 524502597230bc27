#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abcins/enumeration.hpp"
#include "abcins/verify.hpp"

namespace abcins {

// Output formats shared by the CLI and the Python module.
//
// Every document starts with one metadata line beginning with '#'. Exact
// integers that can outgrow 64 bits (N, I) are written as decimal strings.

using Metadata = std::vector<std::pair<std::string, std::string>>;

inline constexpr const char* kCsvHeader = "a,b,c,H,N,S,I,quality,merit,ratio";

/// "# abcins <version> key=value ..."
std::string metadata_line(const Metadata& meta);

/// Shortest decimal that round-trips the double.
std::string format_double(double v);

std::string csv_row(const Triple& t, const TripleStats& s);
nlohmann::ordered_json row_json(const Triple& t, const TripleStats& s);

nlohmann::ordered_json spectrum_json(const Spectrum& spectrum);
nlohmann::ordered_json report_json(const VerificationReport& report);
nlohmann::ordered_json records_json(const std::vector<ReportRow>& rows, Merit merit);

/// Streams rows as CSV (header after the metadata line) or JSON lines.
class RowWriter {
 public:
  enum class Format { Csv, Jsonl };

  RowWriter(std::ostream& out, Format format, const Metadata& meta);
  void write(const Triple& t, const TripleStats& s);
  void write(const Row& row) { write(row.triple, row.stats); }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::ostream& out_;
  Format format_;
  std::uint64_t count_ = 0;
};

}  // namespace abcins
