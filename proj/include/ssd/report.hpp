#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ssd/bigint.hpp"

namespace ssd {

using Json = nlohmann::ordered_json;

// Integers above 2^53 lose precision in common JSON consumers, so they are
// rendered as decimal strings; everything smaller stays a JSON number.
Json json_int(const Bigint& v);

// Structured result of one CLI command. `verified` is derived: a report is
// verified exactly when it carries no failure records.
struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<Json> results;
  std::vector<Json> failures;

  bool verified() const { return failures.empty(); }

  bool operator==(const Report&) const = default;
};

// {"command":..., "params":..., "verified":..., "results":[...], "failures":[...]}
Json report_to_json(const Report& report);

// Inverse of report_to_json. Throws std::domain_error when a field is missing,
// has the wrong shape, or the stored `verified` flag contradicts `failures`.
Report report_from_json(const Json& j);

enum class Format { Text, Json, Csv, Md };

std::string format_name(Format f);  // "text" / "json" / "csv" / "md"

// Deterministic, color-free rendering. Every format ends with a newline.
// Text aligns results into columns; CSV and Markdown flatten result and
// failure rows into one table whose columns are the row keys in first-seen
// order, prefixed by a `record` column (result / failure).
std::string render_report(const Report& report, Format format);

}  // namespace ssd
