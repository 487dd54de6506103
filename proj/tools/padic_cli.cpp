#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "padic/magnitude.hpp"
#include "padic/rational.hpp"

namespace {

// Exit codes: 0 ok, 1 a verify suite recorded failures, 2 bad input or
// parameters, 3 anything else.
int run(const std::function<int(const cli::Options&, std::ostream&)>& cmd, const cli::Options& o) {
  try {
    padic::precision::set_digits(o.precision ? *o.precision : padic::precision::digits_from_env());
    if (o.format != "json" && o.format != "csv") throw padic::InputError("--format: expected json or csv");
    std::ostringstream buf;
    int code = cmd(o, buf);
    if (o.output.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(o.output);
      if (!f) throw padic::InputError(o.output + ": cannot write");
      f << buf.str();
    }
    return code;
  } catch (const padic::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const padic::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic maximal operators, commutators and Lipschitz quantities"};
  app.require_subcommand(1);
  cli::Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv");
    c->add_option("-o,--output", o.output, "write the report here instead of stdout");
    c->add_option("--precision", o.precision, "significant digits (default PADIC_PRECISION or 50)");
  };
  auto point_opt = [&](CLI::App* c) {
    c->add_option("--point", o.point, "coordinates, comma separated (\"m/n\" or \"g: a0 a1 ...\")");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a simple function at a point");
  common(eval);
  eval->add_option("-f,--function", o.function_path, "function JSON")->required();
  point_opt(eval);

  auto* maximal = app.add_subcommand("maximal", "fractional maximal function");
  common(maximal);
  maximal->add_option("-f,--function", o.function_path, "function JSON")->required();
  maximal->add_option("--alpha", o.alpha);
  point_opt(maximal);
  maximal->add_option("--window", o.window, "ball JSON; output the step map on it");
  maximal->add_option("--bstar", o.bstar, "ball JSON; restricted operator");

  auto* comm = app.add_subcommand("commutator", "maximal or nonlinear commutator at a point");
  common(comm);
  comm->add_option("-b,--symbol", o.symbol_path, "symbol JSON")->required();
  comm->add_option("-f,--function", o.function_path, "function JSON")->required();
  comm->add_option("--kind", o.kind, "maximal | nonlinear");
  comm->add_option("--alpha", o.alpha);
  point_opt(comm);

  auto* norm = app.add_subcommand("norm", "lq, luxemburg or lambda norm");
  common(norm);
  norm->add_option("-f,--function", o.function_path, "function JSON")->required();
  norm->add_option("--kind", o.kind, "lq | luxemburg | lambda")->required();
  norm->add_option("--q", o.q, "constant exponent");
  norm->add_option("--exponent", o.exponent_path, "exponent JSON");
  norm->add_option("--beta", o.beta);
  norm->add_flag("--per-ball", o.per_ball);

  auto* quantity = app.add_subcommand("quantity", "characterization quantities over a ball family");
  common(quantity);
  quantity->add_option("-f,--function", o.function_path, "symbol JSON")->required();
  quantity->add_option("--name", o.name, "lip | fracmax | oscillation | nonneg")->required();
  quantity->add_option("--family", o.family_path, "family JSON (default auto)");
  quantity->add_option("--alpha", o.alpha);
  quantity->add_option("--beta", o.beta);
  quantity->add_option("--q", o.q);
  quantity->add_option("--exponent", o.exponent_path);
  quantity->add_option("--s", o.s);
  quantity->add_flag("--per-ball", o.per_ball);

  auto* gen = app.add_subcommand("gen", "generate a function");
  common(gen);
  gen->add_option("--kind", o.kind, "simple | radial_beta | oscillator | indicator | staircase");
  gen->add_option("--prime", o.prime);
  gen->add_option("--dim", o.dim);
  gen->add_option("--seed", o.seed);
  gen->add_option("--gamma", o.gamma);
  gen->add_option("--gamma-lo", o.gamma_lo);
  gen->add_option("--gamma-hi", o.gamma_hi);
  gen->add_option("--cells-min", o.cells_min);
  gen->add_option("--cells-max", o.cells_max);
  gen->add_option("--value-lo", o.value_lo);
  gen->add_option("--value-hi", o.value_hi);
  gen->add_option("--denominator", o.denominator);
  gen->add_flag("--nonneg", o.nonneg);
  gen->add_option("--beta", o.beta);
  gen->add_option("--depth", o.depth);
  gen->add_option("--m", o.m);
  gen->add_option("--steps", o.steps);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", o.suite, "pointwise | characterization | operator_norm")->required();
  verify->add_option("--prime", o.prime);
  verify->add_option("--dim", o.dim);
  verify->add_option("--seed", o.seed);
  verify->add_option("--trials", o.trials, "trials (m_max for the negative direction)");
  verify->add_option("--alpha", o.alpha);
  verify->add_option("--beta", o.beta);
  verify->add_option("--s", o.s);
  verify->add_option("--q", o.q);
  verify->add_option("--exponent", o.exponent_path);
  verify->add_option("--r", o.r, "constant source exponent");
  verify->add_option("--r-exponent", o.r_path, "source exponent JSON");
  verify->add_option("--direction", o.direction, "positive | negative | scaling");
  verify->add_option("--op", o.op, "fractional_maximal | maximal_commutator | nonlinear_commutator");
  verify->add_option("--family", o.family_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*eval) return run(cli::cmd_eval, o);
  if (*maximal) return run(cli::cmd_maximal, o);
  if (*comm) return run(cli::cmd_commutator, o);
  if (*norm) return run(cli::cmd_norm, o);
  if (*quantity) return run(cli::cmd_quantity, o);
  if (*gen) return run(cli::cmd_gen, o);
  return run(cli::cmd_verify, o);
}
