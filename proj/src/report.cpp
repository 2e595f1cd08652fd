#include "epsm/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

namespace epsm {

namespace {

constexpr std::string_view kMissing = "NA";

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Splits one CSV record starting at `pos`; advances past its line break.
std::vector<std::string> read_record(std::string_view csv, std::size_t& pos) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  while (pos < csv.size()) {
    const char c = csv[pos++];
    if (quoted) {
      if (c != '"') {
        fields.back() += c;
      } else if (pos < csv.size() && csv[pos] == '"') {
        fields.back() += '"';
        ++pos;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw InputError("unterminated quote in csv report");
  return fields;
}

template <class T>
T parse_number(const std::string& s, const char* column) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string("bad value '") + s + "' in column " + column);
  }
  return v;
}

std::string render_table(const BenchReport& report) {
  // corpus -> (algorithm order, m order, cells)
  struct Block {
    std::vector<std::string> algorithms;
    std::vector<std::size_t> lengths;
    std::map<std::pair<std::string, std::size_t>, const BenchRow*> cells;
  };
  std::vector<std::string> corpora;
  std::map<std::string, Block> blocks;
  for (const auto& row : report.rows) {
    auto [it, inserted] = blocks.try_emplace(row.corpus);
    if (inserted) corpora.push_back(row.corpus);
    Block& b = it->second;
    if (std::find(b.algorithms.begin(), b.algorithms.end(), row.algorithm) == b.algorithms.end()) {
      b.algorithms.push_back(row.algorithm);
    }
    if (std::find(b.lengths.begin(), b.lengths.end(), row.m) == b.lengths.end()) b.lengths.push_back(row.m);
    b.cells[{row.algorithm, row.m}] = &row;
  }

  std::ostringstream out;
  char cell[32];
  for (const auto& corpus : corpora) {
    const Block& b = blocks[corpus];
    out << corpus << " (mean ms per pattern, preprocessing included)\n";
    std::snprintf(cell, sizeof cell, "%-12s", "m");
    out << cell;
    for (std::size_t m : b.lengths) {
      std::snprintf(cell, sizeof cell, "%10zu", m);
      out << cell;
    }
    out << '\n';
    for (const auto& algo : b.algorithms) {
      std::snprintf(cell, sizeof cell, "%-12s", algo.c_str());
      out << cell;
      for (std::size_t m : b.lengths) {
        auto it = b.cells.find({algo, m});
        if (it == b.cells.end() || !it->second->supported) {
          std::snprintf(cell, sizeof cell, "%10s", "-");
        } else {
          std::snprintf(cell, sizeof cell, "%10.4f", it->second->mean_ms);
        }
        out << cell;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::table) return render_table(report);

  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : report.rows) {
    out += csv_field(row.corpus) + ',' + csv_field(row.algorithm) + ',' + std::to_string(row.m) + ',' +
           std::to_string(row.patterns) + ',';
    if (row.supported) {
      out += shortest(row.mean_ms) + ',' + shortest(row.median_ms) + ',' + std::to_string(row.total_occ) + ',' +
             std::to_string(row.checksum);
    } else {
      const std::string na(kMissing);
      out += na + ',' + na + ',' + na + ',' + na;
    }
    out += '\n';
  }
  return out;
}

BenchReport parse_csv_report(std::string_view csv) {
  std::size_t pos = 0;
  const auto header = read_record(csv, pos);
  std::string joined;
  for (std::size_t i = 0; i < header.size(); ++i) joined += (i ? "," : "") + header[i];
  if (joined != kCsvHeader) throw InputError("unexpected csv header '" + joined + "'");

  BenchReport report;
  while (pos < csv.size()) {
    const auto f = read_record(csv, pos);
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != 8) throw InputError("csv row has " + std::to_string(f.size()) + " fields, expected 8");
    BenchRow row;
    row.corpus = f[0];
    row.algorithm = f[1];
    row.m = parse_number<std::size_t>(f[2], "m");
    row.patterns = parse_number<std::size_t>(f[3], "patterns");
    row.supported = f[4] != kMissing;
    if (row.supported) {
      row.mean_ms = parse_number<double>(f[4], "mean_ms");
      row.median_ms = parse_number<double>(f[5], "median_ms");
      row.total_occ = parse_number<std::uint64_t>(f[6], "total_occ");
      row.checksum = parse_number<std::uint64_t>(f[7], "checksum");
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace epsm
