#include "padic/io.hpp"

#include <fstream>
#include <sstream>

namespace padic::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, "missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected integer");
  return j.get<std::int64_t>();
}

// Rationals travel as strings; plain JSON integers are tolerated.
Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) bad(path, "expected rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  return out;
}

std::string exactness(const Magnitude& m) { return m.is_exact() ? "exact" : "inexact"; }

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line:column
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

PAdicPoint point_from_json(const Json& j, std::int64_t prime, const std::string& path) {
  if (!j.is_array() || j.empty()) bad(path, "expected non-empty array of coordinates");
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (j[i].is_number_integer()) {
      coords.emplace_back(j[i].get<std::int64_t>());
    } else if (j[i].is_string()) {
      try {
        coords.push_back(PAdicPoint::parse_coordinate(j[i].get<std::string>(), prime));
      } catch (const InputError& e) {
        bad(p, e.what());
      }
    } else {
      bad(p, "expected coordinate string");
    }
  }
  return PAdicPoint(prime, std::move(coords));
}

Ball ball_from_json(const Json& j, std::int64_t prime, const std::string& path) {
  PAdicPoint c = point_from_json(field(j, "center", path), prime, path + ".center");
  return Ball(c, as_int(field(j, "gamma", path), path + ".gamma"));
}

namespace {

std::pair<std::int64_t, int> space_from_json(const Json& j, const std::string& path) {
  const std::int64_t p = as_int(field(j, "prime", path), path + ".prime");
  const std::int64_t n = as_int(field(j, "dim", path), path + ".dim");
  if (!is_prime(p)) bad(path + ".prime", std::to_string(p) + " is not prime");
  if (n < 1 || n > 64) bad(path + ".dim", "expected 1 <= dim <= 64");
  return {p, static_cast<int>(n)};
}

std::vector<Cell> cells_from_json(const Json& j, std::int64_t p, int n, const std::string& path) {
  const Json& arr = field(j, "cells", path);
  if (!arr.is_array()) bad(path + ".cells", "expected array");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string cp = path + ".cells[" + std::to_string(i) + "]";
    Ball b = ball_from_json(arr[i], p, cp);
    if (b.dim() != n) bad(cp + ".center", "dimension does not match dim");
    cells.push_back(Cell{b, as_rational(field(arr[i], "value", cp), cp + ".value")});
  }
  return cells;
}

}  // namespace

SimpleFunction simple_function_from_json(const Json& j) {
  auto [p, n] = space_from_json(j, "function");
  auto cells = cells_from_json(j, p, n, "function");
  try {
    return SimpleFunction(p, n, std::move(cells));
  } catch (const InputError& e) {
    bad("function.cells", e.what());
  }
}

ExponentFunction exponent_from_json(const Json& j) {
  auto [p, n] = space_from_json(j, "exponent");
  auto cells = cells_from_json(j, p, n, "exponent");
  Rational q_inf = as_rational(field(j, "q_inf", "exponent"), "exponent.q_inf");
  ExponentClass cls = ExponentClass::P;
  if (auto it = j.find("class"); it != j.end()) {
    if (*it == "P") {
      cls = ExponentClass::P;
    } else if (*it == "P1") {
      cls = ExponentClass::P1;
    } else {
      bad("exponent.class", "expected \"P\" or \"P1\"");
    }
  }
  SimpleFunction base = [&] {
    try {
      return SimpleFunction(p, n, std::move(cells));
    } catch (const InputError& e) {
      bad("exponent.cells", e.what());
    }
  }();
  return ExponentFunction(std::move(base), q_inf, cls);
}

BallFamily family_from_json(const Json& j, std::int64_t prime) {
  const Json& kind = field(j, "kind", "family");
  if (kind == "explicit") {
    const Json& arr = field(j, "balls", "family");
    if (!arr.is_array()) bad("family.balls", "expected array");
    std::vector<Ball> balls;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      balls.push_back(ball_from_json(arr[i], prime, "family.balls[" + std::to_string(i) + "]"));
    }
    return BallFamily::explicit_list(std::move(balls));
  }
  if (kind == "window") {
    Ball w = ball_from_json(field(j, "window", "family"), prime, "family.window");
    return BallFamily::window_scan(w, as_int(field(j, "gamma_lo", "family"), "family.gamma_lo"),
                                   as_int(field(j, "gamma_hi", "family"), "family.gamma_hi"));
  }
  if (kind == "auto") {
    int cap = 200;
    if (auto it = j.find("max_ancestors"); it != j.end()) {
      cap = static_cast<int>(as_int(*it, "family.max_ancestors"));
    }
    return BallFamily::auto_cutoff(cap);
  }
  bad("family.kind", "expected \"explicit\", \"window\" or \"auto\"");
}

Json to_json(const PAdicPoint& x) {
  Json arr = Json::array();
  for (const auto& c : x.coords()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const Ball& b) { return Json{{"center", to_json(b.center())}, {"gamma", b.gamma()}}; }

Json to_json(const SimpleFunction& f) {
  Json cells = Json::array();
  for (const auto& c : f.cells()) {
    Json cj = to_json(c.ball);
    cj["value"] = to_string(c.value);
    cells.push_back(std::move(cj));
  }
  return Json{{"prime", f.prime()}, {"dim", f.dim()}, {"cells", std::move(cells)}};
}

Json to_json(const ExponentFunction& q) {
  Json j = to_json(q.base());
  j["q_inf"] = to_string(q.q_inf());
  j["class"] = q.exponent_class() == ExponentClass::P ? "P" : "P1";
  return j;
}

Json to_json(const Magnitude& m) {
  return Json{{"value", m.to_string()},
              {"approx", m.to_double()},
              {"exact", m.is_exact()},
              {"digits", m.digits()}};
}

Json to_json(const NormReport& r, bool include_per_ball) {
  Json j;
  j["quantity"] = r.quantity;
  j["value"] = to_json(r.value);
  Json w = Json::object();
  if (r.witness_ball) w["ball"] = to_json(*r.witness_ball);
  if (r.witness_pair) w["pair"] = Json::array({to_json(r.witness_pair->first), to_json(r.witness_pair->second)});
  j["witness"] = w.empty() ? Json() : w;
  j["family"] = r.family;
  j["exactness"] = exactness(r.value);
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  if (r.gamma_lo) j["gamma_lo"] = *r.gamma_lo;
  if (r.gamma_hi) j["gamma_hi"] = *r.gamma_hi;
  j["cutoff_certified"] = r.cutoff_certified;
  if (include_per_ball) {
    Json pb = Json::array();
    for (const auto& bv : r.per_ball) {
      pb.push_back(Json{{"ball", to_json(bv.ball)}, {"value", to_json(bv.value)}});
    }
    j["per_ball"] = std::move(pb);
  }
  return j;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["ok"] = r.ok();
  j["trials"] = r.trials;
  j["oracle_checks"] = r.oracle_checks;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"check", f.check}, {"trial", f.trial}, {"seed", f.seed}, {"witness", f.witness}});
  }
  j["failures"] = std::move(failures);
  Json stats = Json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = std::move(stats);
  j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

std::string norm_report_csv_header() {
  return "csv_version,quantity,value,approx,exactness,family,gamma_lo,gamma_hi,witness_ball_center,"
         "witness_ball_gamma,cutoff_certified";
}

std::string to_csv_row(const NormReport& r) {
  std::string center;
  std::string gamma;
  if (r.witness_ball) {
    center = r.witness_ball->center().to_string();
    gamma = std::to_string(r.witness_ball->gamma());
  }
  return join_csv({std::to_string(kCsvVersion), r.quantity, r.value.to_string(),
                   fmt_double(r.value.to_double()), exactness(r.value), r.family,
                   r.gamma_lo ? std::to_string(*r.gamma_lo) : "",
                   r.gamma_hi ? std::to_string(*r.gamma_hi) : "", center, gamma,
                   r.cutoff_certified ? "true" : "false"});
}

std::string suite_report_csv_header() {
  return "csv_version,suite,ok,trials,failures,oracle_checks,runtime_seconds,stats";
}

std::string to_csv_row(const SuiteReport& r) {
  std::string stats;
  for (const auto& [k, v] : r.stats) {
    if (!stats.empty()) stats += ';';
    stats += k + "=" + v;
  }
  return join_csv({std::to_string(kCsvVersion), r.suite, r.ok() ? "true" : "false",
                   std::to_string(r.trials), std::to_string(r.failures.size()),
                   std::to_string(r.oracle_checks), fmt_double(r.runtime_seconds), stats});
}

}  // namespace padic::io
