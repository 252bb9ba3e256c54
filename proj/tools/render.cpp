#include "render.hpp"

#include <cstdio>
#include <utility>
#include <vector>

namespace movmed::cli {

namespace {

using Flat = std::vector<std::pair<std::string, json>>;

void flatten(const json& j, const std::string& prefix, Flat& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "_" + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "_" + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, j);
  }
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

std::string text_cell(const json& v) {
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
    return buf;
  }
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::vector<Flat> table_rows(const json& report) {
  std::vector<Flat> rows;
  if (report.is_object() && report.contains("rows") && report["rows"].is_array()) {
    for (const auto& row : report["rows"]) {
      Flat f;
      flatten(row, "", f);
      rows.push_back(std::move(f));
    }
  } else {
    Flat f;
    flatten(report, "", f);
    rows.push_back(std::move(f));
  }
  return rows;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw usage_error("--format must be json, csv or text");
}

std::string render(const json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";

  const auto rows = table_rows(report);
  std::string out;
  if (format == Format::csv) {
    if (rows.empty()) return out;
    for (std::size_t i = 0; i < rows.front().size(); ++i) out += (i ? "," : "") + rows.front()[i].first;
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i].second);
      out += "\n";
    }
    return out;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "\n";
    for (const auto& [key, value] : rows[r]) out += key + " = " + text_cell(value) + "\n";
  }
  return out;
}

}  // namespace movmed::cli
