#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "padic/norms.hpp"
#include "padic/suites.hpp"

namespace padic::io {

using Json = nlohmann::ordered_json;

/// Bumped whenever a CSV column is added, removed or reordered.
inline constexpr int kCsvVersion = 1;

/// Parses text as JSON. Syntax errors become InputError carrying the line
/// and column; `source` names the file in messages.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

// Every loader below throws InputError naming the offending field path,
// e.g. "cells[2].gamma: expected integer".

PAdicPoint point_from_json(const Json& j, std::int64_t prime, const std::string& path = "point");
Ball ball_from_json(const Json& j, std::int64_t prime, const std::string& path = "ball");
/// {prime, dim, cells: [{center: [strings], gamma, value}]}; overlapping
/// cells are rejected.
SimpleFunction simple_function_from_json(const Json& j);
/// {prime, dim, cells, q_inf, class?: "P" | "P1"}.
ExponentFunction exponent_from_json(const Json& j);
/// {"kind": "explicit", "balls": [...]} | {"kind": "window", "window": ball,
/// "gamma_lo", "gamma_hi"} | {"kind": "auto", "max_ancestors"?}.
BallFamily family_from_json(const Json& j, std::int64_t prime);

Json to_json(const PAdicPoint& x);
Json to_json(const Ball& b);
Json to_json(const SimpleFunction& f);
Json to_json(const ExponentFunction& q);
/// {value, approx, exact, digits}: value is "m/n" or "c*p^(a/b)" when exact,
/// a decimal string otherwise; approx is a double for quick plotting.
Json to_json(const Magnitude& m);
Json to_json(const NormReport& r, bool include_per_ball = false);
Json to_json(const SuiteReport& r);

/// Header and rows with a leading csv_version column.
std::string norm_report_csv_header();
std::string to_csv_row(const NormReport& r);
std::string suite_report_csv_header();
std::string to_csv_row(const SuiteReport& r);

}  // namespace padic::io
