#include "ssd/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ssd {

namespace {

const Bigint kJsonSafeBound = Bigint(1) << 53;  // 2^53: exact in a double

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();  // numbers, arrays, objects: compact JSON
}

// Keys of `rows` in first-seen order.
std::vector<std::string> collect_columns(const std::vector<const Json*>& rows) {
  std::vector<std::string> columns;
  for (const Json* row : rows) {
    if (!row->is_object()) continue;
    for (const auto& item : row->items()) {
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) {
        columns.push_back(item.key());
      }
    }
  }
  return columns;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string params_line(const Json& params) {
  std::string out;
  for (const auto& item : params.items()) {
    if (!out.empty()) out += ' ';
    out += item.key();
    out += '=';
    out += cell_text(item.value());
  }
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << '\n';
  out << "params: " << params_line(report.params) << '\n';

  std::vector<const Json*> rows;
  rows.reserve(report.results.size());
  for (const Json& r : report.results) rows.push_back(&r);
  std::vector<std::string> columns = collect_columns(rows);

  out << "results: " << report.results.size() << '\n';
  if (!columns.empty()) {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const Json* row : rows) {
      std::vector<std::string> line(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (row->is_object() && row->contains(columns[c])) {
          line[c] = cell_text((*row)[columns[c]]);
        }
        width[c] = std::max(width[c], line[c].size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      out << " ";
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out << ' ' << line[c];
        if (c + 1 < columns.size()) {
          out << std::string(width[c] - line[c].size(), ' ');
        }
      }
      out << '\n';
    };
    emit(columns);
    for (const auto& line : cells) emit(line);
  }

  out << "failures: " << report.failures.size() << '\n';
  for (const Json& f : report.failures) out << "  " << f.dump() << '\n';
  out << "status: " << (report.verified() ? "VERIFIED" : "FAILED") << '\n';
  return out.str();
}

std::string render_flat(const Report& report, bool markdown) {
  std::vector<const Json*> rows;
  rows.reserve(report.results.size() + report.failures.size());
  for (const Json& r : report.results) rows.push_back(&r);
  for (const Json& f : report.failures) rows.push_back(&f);
  std::vector<std::string> columns = collect_columns(rows);

  auto escape = [&](const std::string& s) {
    return markdown ? md_escape(s) : csv_escape(s);
  };

  std::ostringstream out;
  if (markdown) {
    out << "## " << report.command << '\n';
    std::string params = params_line(report.params);
    if (!params.empty()) out << '`' << params << "`\n";
    out << '\n';
    out << "| record |";
    for (const auto& c : columns) out << ' ' << md_escape(c) << " |";
    out << '\n';
    out << "| --- |";
    for (std::size_t c = 0; c < columns.size(); ++c) out << " --- |";
    out << '\n';
  } else {
    out << "record";
    for (const auto& c : columns) out << ',' << csv_escape(c);
    out << '\n';
  }

  auto emit_row = [&](const Json& row, const char* kind) {
    if (markdown) {
      out << "| " << kind << " |";
      for (const auto& c : columns) {
        std::string cell =
            row.is_object() && row.contains(c) ? cell_text(row[c]) : "";
        out << ' ' << escape(cell) << " |";
      }
      out << '\n';
    } else {
      out << kind;
      for (const auto& c : columns) {
        std::string cell =
            row.is_object() && row.contains(c) ? cell_text(row[c]) : "";
        out << ',' << escape(cell);
      }
      out << '\n';
    }
  };
  for (const Json& r : report.results) emit_row(r, "result");
  for (const Json& f : report.failures) emit_row(f, "failure");

  if (markdown) {
    out << '\n'
        << "status: " << (report.verified() ? "VERIFIED" : "FAILED") << '\n';
  }
  return out.str();
}

}  // namespace

Json json_int(const Bigint& v) {
  if (v >= -kJsonSafeBound && v <= kJsonSafeBound) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(str(v));
}

Json report_to_json(const Report& report) {
  Json j = Json::object();
  j["command"] = report.command;
  j["params"] = report.params;
  j["verified"] = report.verified();
  j["results"] = report.results;
  j["failures"] = report.failures;
  return j;
}

Report report_from_json(const Json& j) {
  if (!j.is_object()) throw std::domain_error("report_from_json: not an object");
  for (const char* key : {"command", "params", "verified", "results", "failures"}) {
    if (!j.contains(key)) {
      throw std::domain_error(std::string("report_from_json: missing field ") + key);
    }
  }
  if (!j["command"].is_string() || !j["params"].is_object() ||
      !j["verified"].is_boolean() || !j["results"].is_array() ||
      !j["failures"].is_array()) {
    throw std::domain_error("report_from_json: field with wrong type");
  }
  Report report;
  report.command = j["command"].get<std::string>();
  report.params = j["params"];
  for (const Json& r : j["results"]) report.results.push_back(r);
  for (const Json& f : j["failures"]) report.failures.push_back(f);
  if (j["verified"].get<bool>() != report.verified()) {
    throw std::domain_error(
        "report_from_json: verified flag contradicts failure list");
  }
  return report;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Md: return "md";
  }
  throw std::logic_error("format_name: unknown format");
}

std::string render_report(const Report& report, Format format) {
  switch (format) {
    case Format::Text: return render_text(report);
    case Format::Json: return report_to_json(report).dump(2) + "\n";
    case Format::Csv: return render_flat(report, /*markdown=*/false);
    case Format::Md: return render_flat(report, /*markdown=*/true);
  }
  throw std::logic_error("render_report: unknown format");
}

}  // namespace ssd
