#include "cli_commands.hpp"

#include <sstream>

#include "padic/io.hpp"
#include "padic/suites.hpp"

namespace cli {

using namespace padic;
using io::Json;

namespace {

Rational flag_rational(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError("--" + flag + ": " + e.what());
  }
}

SimpleFunction load_function(const std::string& path, const std::string& flag) {
  if (path.empty()) throw InputError("--" + flag + " is required");
  try {
    return io::simple_function_from_json(io::read_json_file(path));
  } catch (const InputError& e) {
    std::string what = e.what();
    if (what.starts_with(path + ":")) throw;
    throw InputError(path + ": " + what);
  }
}

// Comma-separated coordinates, or a JSON array when the text starts with '['.
PAdicPoint parse_point(const std::string& text, std::int64_t p) {
  if (text.empty()) throw InputError("--point is required");
  if (text.front() == '[') return io::point_from_json(io::parse_json(text, "--point"), p, "--point");
  Json arr = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) arr.push_back(item);
  return io::point_from_json(arr, p, "--point");
}

Ball parse_ball(const std::string& text, std::int64_t p, const std::string& flag) {
  return io::ball_from_json(io::parse_json(text, "--" + flag), p, "--" + flag);
}

ExponentFunction load_exponent(const std::optional<std::string>& constant, const std::string& path,
                               std::int64_t p, int n, const std::string& flag) {
  if (!path.empty()) {
    try {
      return io::exponent_from_json(io::read_json_file(path));
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  return ExponentFunction::constant(p, n, flag_rational(constant.value_or("2"), flag));
}

void check_point(const SimpleFunction& f, const PAdicPoint& x) {
  require_same_space(f.prime(), f.dim(), x.prime(), x.dim());
}

void emit(const Options& o, std::ostream& out, const Json& j, const std::string& csv_header,
          const std::string& csv_row) {
  if (o.format == "csv") {
    out << csv_header << "\n" << csv_row << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
}

std::string value_csv_header() { return "csv_version,command,value,approx,exact"; }

std::string value_csv_row(const std::string& command, const Magnitude& m) {
  std::ostringstream os;
  os.precision(17);
  os << io::kCsvVersion << "," << command << "," << m.to_string() << "," << m.to_double() << ","
     << (m.is_exact() ? "true" : "false");
  return os.str();
}

Json step_map_json(const StepMap& g) {
  Json cells = Json::array();
  for (const auto& c : g.cells) {
    Json cj = io::to_json(c.ball);
    cj["value"] = io::to_json(c.value);
    cells.push_back(std::move(cj));
  }
  return cells;
}

}  // namespace

int cmd_eval(const Options& o, std::ostream& out) {
  SimpleFunction f = load_function(o.function_path, "function");
  PAdicPoint x = parse_point(o.point, f.prime());
  check_point(f, x);
  Magnitude v(f.evaluate(x));
  Json j{{"command", "eval"}, {"point", io::to_json(x)}, {"value", io::to_json(v)}};
  emit(o, out, j, value_csv_header(), value_csv_row("eval", v));
  return 0;
}

int cmd_maximal(const Options& o, std::ostream& out) {
  SimpleFunction f = load_function(o.function_path, "function");
  const Rational alpha = flag_rational(o.alpha, "alpha");
  require_alpha(alpha, f.dim());
  Json j{{"command", "maximal"}, {"alpha", to_string(alpha)}};
  if (!o.window.empty()) {
    Ball w = parse_ball(o.window, f.prime(), "window");
    require_same_space(f.prime(), f.dim(), w.prime(), w.dim());
    StepMap g = o.bstar.empty() ? maximal_fn(f, alpha, w) : [&] {
      Ball b = parse_ball(o.bstar, f.prime(), "bstar");
      require_same_space(f.prime(), f.dim(), b.prime(), b.dim());
      return maximal_restricted_fn(f, b, alpha);
    }();
    j["window"] = io::to_json(w);
    j["cells"] = step_map_json(g);
    if (o.format == "csv") {
      out << "csv_version,center,gamma,value,approx,exact\n";
      for (const auto& c : g.cells) {
        std::ostringstream os;
        os.precision(17);
        os << io::kCsvVersion << ",\"" << c.ball.center().to_string() << "\"," << c.ball.gamma() << ","
           << c.value.to_string() << "," << c.value.to_double() << ","
           << (c.value.is_exact() ? "true" : "false") << "\n";
        out << os.str();
      }
    } else {
      out << j.dump(2) << "\n";
    }
    return 0;
  }
  PAdicPoint x = parse_point(o.point, f.prime());
  check_point(f, x);
  j["point"] = io::to_json(x);
  Magnitude v;
  if (!o.bstar.empty()) {
    Ball b = parse_ball(o.bstar, f.prime(), "bstar");
    require_same_space(f.prime(), f.dim(), b.prime(), b.dim());
    RestrictedResult r = maximal_restricted(f, b, x, alpha);
    v = r.value;
    j["bstar"] = io::to_json(b);
    j["outside_warning"] = r.outside_warning;
    if (r.gamma) j["gamma"] = *r.gamma;
  } else {
    ScanResult r = maximal_scan(f, x, alpha);
    v = r.value;
    if (r.gamma) j["gamma"] = *r.gamma;
    j["scan"] = Json::array({r.gamma_lo, r.gamma_hi});
  }
  j["value"] = io::to_json(v);
  emit(o, out, j, value_csv_header(), value_csv_row("maximal", v));
  return 0;
}

int cmd_commutator(const Options& o, std::ostream& out) {
  SimpleFunction b = load_function(o.symbol_path, "symbol");
  SimpleFunction f = load_function(o.function_path, "function");
  require_same_space(b.prime(), b.dim(), f.prime(), f.dim());
  const Rational alpha = flag_rational(o.alpha, "alpha");
  require_alpha(alpha, f.dim());
  const std::string kind = o.kind.empty() ? "maximal" : o.kind;
  if (kind != "maximal" && kind != "nonlinear") {
    throw InputError("--kind: expected maximal or nonlinear");
  }
  PAdicPoint x = parse_point(o.point, f.prime());
  check_point(f, x);
  Magnitude v = kind == "maximal" ? maximal_commutator_at(b, f, x, alpha)
                                  : nonlinear_commutator_at(b, f, x, alpha);
  Json j{{"command", "commutator"},
         {"kind", kind},
         {"alpha", to_string(alpha)},
         {"point", io::to_json(x)},
         {"value", io::to_json(v)}};
  emit(o, out, j, value_csv_header(), value_csv_row("commutator_" + kind, v));
  return 0;
}

int cmd_norm(const Options& o, std::ostream& out) {
  SimpleFunction f = load_function(o.function_path, "function");
  NormReport rep;
  if (o.kind == "lq") {
    Rational q = flag_rational(o.q.value_or("2"), "q");
    rep.quantity = "lq";
    rep.value = lq_norm(f, q);
    rep.parameters = {{"q", to_string(q)}};
  } else if (o.kind == "luxemburg") {
    ExponentFunction q = load_exponent(o.q, o.exponent_path, f.prime(), f.dim(), "q");
    require_same_space(f.prime(), f.dim(), q.prime(), q.dim());
    rep.quantity = "luxemburg";
    rep.value = luxemburg_norm(f, q);
    rep.parameters = {{"q_inf", to_string(q.q_inf())}, {"q_constant", q.is_constant() ? "true" : "false"}};
  } else if (o.kind == "lambda") {
    rep = lambda_beta_norm(f, flag_rational(o.beta, "beta"));
  } else {
    throw InputError("--kind: expected lq, luxemburg or lambda");
  }
  emit(o, out, io::to_json(rep, o.per_ball), io::norm_report_csv_header(), io::to_csv_row(rep));
  return 0;
}

int cmd_quantity(const Options& o, std::ostream& out) {
  SimpleFunction b = load_function(o.function_path, "function");
  const Rational beta = flag_rational(o.beta, "beta");
  BallFamily family = BallFamily::auto_cutoff();
  if (!o.family_path.empty()) {
    try {
      family = io::family_from_json(io::read_json_file(o.family_path), b.prime());
    } catch (const InputError& e) {
      throw InputError(o.family_path + ": " + e.what());
    }
  }
  NormReport rep;
  if (o.name == "lip") {
    rep = lip_beta_q_quantity(b, beta, flag_rational(o.q.value_or("2"), "q"), family);
  } else if (o.name == "fracmax") {
    ExponentFunction q = load_exponent(o.q, o.exponent_path, b.prime(), b.dim(), "q");
    rep = quantity_fracmax(b, flag_rational(o.alpha, "alpha"), beta, q, family);
  } else if (o.name == "oscillation") {
    ExponentFunction q = load_exponent(o.q, o.exponent_path, b.prime(), b.dim(), "q");
    rep = quantity_oscillation(b, beta, q, family);
  } else if (o.name == "nonneg") {
    rep = quantity_nonneg_max(b, beta, flag_rational(o.s, "s"), family);
  } else {
    throw InputError("--name: expected lip, fracmax, oscillation or nonneg");
  }
  emit(o, out, io::to_json(rep, o.per_ball), io::norm_report_csv_header(), io::to_csv_row(rep));
  return 0;
}

int cmd_gen(const Options& o, std::ostream& out) {
  SimpleFunction f(o.prime, o.dim);
  const std::string kind = o.kind.empty() ? "simple" : o.kind;
  if (kind == "simple") {
    GeneratorSpec g;
    g.prime = o.prime;
    g.dim = o.dim;
    g.gamma_lo = o.gamma_lo;
    g.gamma_hi = o.gamma_hi;
    g.cells_min = o.cells_min;
    g.cells_max = o.cells_max;
    g.value_lo = flag_rational(o.value_lo, "value-lo");
    g.value_hi = flag_rational(o.value_hi, "value-hi");
    g.value_denominator = o.denominator;
    g.nonneg = o.nonneg;
    g.seed = o.seed;
    f = gen_simple(g);
  } else {
    ProfileSpec ps;
    ps.kind = parse_profile_kind(kind);
    ps.prime = o.prime;
    ps.dim = o.dim;
    ps.beta = flag_rational(o.beta, "beta");
    ps.gamma = o.gamma;
    ps.depth = o.depth;
    ps.m = o.m;
    ps.steps = o.steps;
    f = gen_lipschitz_profile(ps);
  }
  // csv has no natural shape for a function; always JSON
  out << io::to_json(f).dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteReport rep;
  if (o.suite == "pointwise") {
    PointwiseConfig c;
    c.prime = o.prime;
    c.dim = o.dim;
    c.seed = o.seed;
    if (o.trials > 0) c.trials = o.trials;
    require_prime(c.prime);
    rep = suite_pointwise_lemmas(c);
  } else if (o.suite == "characterization") {
    CharacterizationConfig c;
    c.prime = o.prime;
    c.dim = o.dim;
    c.seed = o.seed;
    c.alpha = flag_rational(o.alpha, "alpha");
    c.beta = flag_rational(o.beta, "beta");
    c.s = flag_rational(o.s, "s");
    require_prime(c.prime);
    require_beta(c.beta);
    if (c.alpha <= 0 || c.alpha + c.beta >= c.dim) {
      throw ParameterError("requires 0 < alpha and alpha + beta < n");
    }
    c.q = load_exponent(o.q, o.exponent_path, c.prime, c.dim, "q");
    Direction d = parse_direction(o.direction);
    if (o.trials > 0) {
      if (d == Direction::Negative) {
        c.m_max = o.trials;
      } else {
        c.trials = o.trials;
      }
    }
    BallFamily family = BallFamily::auto_cutoff();
    if (!o.family_path.empty()) family = io::family_from_json(io::read_json_file(o.family_path), c.prime);
    rep = suite_characterization(d, family, c);
  } else if (o.suite == "operator_norm") {
    OperatorNormConfig c;
    c.prime = o.prime;
    c.dim = o.dim;
    c.seed = o.seed;
    c.alpha = flag_rational(o.alpha, "alpha");
    c.beta = flag_rational(o.beta, "beta");
    if (o.trials > 0) c.trials = o.trials;
    require_prime(c.prime);
    ExponentFunction r = o.r_path.empty()
                             ? ExponentFunction::constant(c.prime, c.dim, flag_rational(o.r, "r"))
                             : io::exponent_from_json(io::read_json_file(o.r_path));
    rep = suite_operator_norm(parse_operator_kind(o.op), r, c);
  } else {
    throw InputError("--suite: expected pointwise, characterization or operator_norm");
  }
  emit(o, out, io::to_json(rep), io::suite_report_csv_header(), io::to_csv_row(rep));
  return rep.ok() ? 0 : 1;
}

}  // namespace cli
