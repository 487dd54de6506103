#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace cli {

// Flag values as typed; parsing and range checks happen in the commands so
// that every error maps to exit code 2 in one place.
struct Options {
  std::string format = "json";
  std::string output;
  std::optional<unsigned> precision;

  std::int64_t prime = 2;
  int dim = 1;
  std::uint64_t seed = 7;
  std::string alpha = "1/4";
  std::string beta = "1/2";
  std::string s = "2";
  std::optional<std::string> q;
  std::string exponent_path;
  std::string r = "2";
  std::string r_path;

  std::string function_path;
  std::string symbol_path;
  std::string family_path;
  std::string point;
  std::string window;
  std::string bstar;

  std::string kind;
  std::string name;
  std::string suite;
  std::string direction = "negative";
  std::string op = "fractional_maximal";
  int trials = 0;
  bool per_ball = false;

  // gen
  std::int64_t gamma = 0;
  std::int64_t gamma_lo = -3;
  std::int64_t gamma_hi = 1;
  int cells_min = 1;
  int cells_max = 6;
  std::string value_lo = "-4";
  std::string value_hi = "4";
  std::int64_t denominator = 4;
  bool nonneg = false;
  int depth = 4;
  int m = 1;
  int steps = 3;
};

int cmd_eval(const Options& o, std::ostream& out);
int cmd_maximal(const Options& o, std::ostream& out);
int cmd_commutator(const Options& o, std::ostream& out);
int cmd_norm(const Options& o, std::ostream& out);
int cmd_quantity(const Options& o, std::ostream& out);
int cmd_gen(const Options& o, std::ostream& out);
int cmd_verify(const Options& o, std::ostream& out);

}  // namespace cli
