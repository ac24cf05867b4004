#include "revroot/bench/report.hpp"

#include <charconv>
#include <cstdio>

namespace revroot::bench {

namespace {

// Case names may come from suite files; quote anything CSV-special.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string markdown_time(double us) {
  char buf[32];
  std::snprintf(buf, sizeof buf, us < 10.0 ? "%.2f" : "%.0f", us);
  return buf;
}

std::string converge_cell(const SuiteRow& row) {
  if (!row.status) return "No (error: " + row.error + ")";
  if (*row.status == Status::Converged) {
    if (row.at_known_root == false) return "No (reached x = " + format_real(row.x_final) + ")";
    return "yes";
  }
  return "No (" + std::string(status_name(*row.status)) + ")";
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string emit_report(std::span<const SuiteRow> rows, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Csv) {
    out += kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
      out += csv_field(r.method) + ',' + csv_field(r.case_name) + ',' + std::to_string(r.steps) + ',' +
             row_status(r) + ',';
      if (r.status) out += format_real(r.residual);
      out += ',';
      if (r.status) out += format_real(r.time_us);
      out += ',';
      if (r.coc) out += format_real(*r.coc);
      out += '\n';
    }
    return out;
  }

  const std::string* current = nullptr;
  for (const auto& r : rows) {
    if (!current || *current != r.case_name) {
      if (current) out += '\n';
      current = &r.case_name;
      out += "### " + r.case_title + "\n\n";
      out += "| Method | Time µs | Steps | converge |\n";
      out += "|---|---|---|---|\n";
    }
    out += "| " + r.label + " | " + (r.status ? markdown_time(r.time_us) : std::string()) + " | " +
           std::to_string(r.steps) + " | " + converge_cell(r) + " |\n";
  }
  return out;
}

}  // namespace revroot::bench
