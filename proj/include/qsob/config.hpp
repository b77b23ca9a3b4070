#pragma once

// Run configuration: key=value file lines, overridden by command-line flags.
//
//   q, alpha, mass        rational literals ("1/2", "0.7", "-3")
//   mass_convention       effective | raw
//   n_max, precision_bits, seed
//   mode                  exact | float
//   tail_tol              decimal literal
//   output                json | csv

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "qsob/scalar.hpp"
#include "qsob/sobolev.hpp"

namespace qsob {

/// Invalid configuration or usage (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<std::string> q;
  std::optional<std::string> alpha;
  std::optional<std::string> mass;
  std::optional<std::string> mass_convention;
  std::optional<long> n_max;
  std::string mode = "exact";
  long precision_bits = 256;
  std::string tail_tol = "1e-30";
  std::string output = "json";
  unsigned long seed = 1;

  /// Applies one key=value assignment.
  void set(const std::string& key, const std::string& value) {
    try {
      if (key == "q") {
        q = value;
      } else if (key == "alpha") {
        alpha = value;
      } else if (key == "mass") {
        mass = value;
      } else if (key == "mass_convention") {
        mass_convention = value;
      } else if (key == "n_max") {
        n_max = std::stol(value);
      } else if (key == "mode") {
        mode = value;
      } else if (key == "precision_bits") {
        precision_bits = std::stol(value);
      } else if (key == "tail_tol") {
        tail_tol = value;
      } else if (key == "output") {
        output = value;
      } else if (key == "seed") {
        seed = std::stoul(value);
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw ConfigError("bad value for '" + key + "': '" + value + "'");
    }
  }

  /// Reads key=value lines; blank lines and '#' comments are ignored.
  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
      set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
  }

  bool exact() const { return mode == "exact"; }

  Rational q_value() const { return parse_checked("q", q.value_or("1/2")); }
  Rational alpha_value() const { return parse_checked("alpha", alpha.value_or("2")); }
  Rational mass_value() const { return parse_checked("mass", mass.value_or("1")); }
  Rational tail_tol_value() const { return parse_checked("tail_tol", tail_tol); }
  long n_max_value(long fallback) const { return n_max.value_or(fallback); }

  MassConvention convention() const {
    const std::string c = mass_convention.value_or("effective");
    return c == "raw" ? MassConvention::kRaw : MassConvention::kEffective;
  }

  /// Rejects out-of-domain parameters before any computation.
  void validate() const {
    if (mode != "exact" && mode != "float") throw ConfigError("mode must be exact or float, got '" + mode + "'");
    if (output != "json" && output != "csv") throw ConfigError("output must be json or csv, got '" + output + "'");
    if (mass_convention && *mass_convention != "effective" && *mass_convention != "raw") {
      throw ConfigError("mass_convention must be effective or raw, got '" + *mass_convention + "'");
    }
    if (q) {
      const Rational v = q_value();
      if (sgn(v) <= 0 || v >= 1) throw ConfigError("q must lie in (0,1), got " + *q);
    }
    if (alpha && abs(alpha_value()) <= 1) throw ConfigError("alpha must lie outside [-1,1], got " + *alpha);
    if (mass && sgn(mass_value()) <= 0) throw ConfigError("mass must be positive, got " + *mass);
    if (n_max && *n_max < 0) throw ConfigError("n_max must be non-negative");
    if (precision_bits < Real::kMinPrecision) throw ConfigError("precision_bits must be at least 64");
    if (sgn(tail_tol_value()) <= 0) throw ConfigError("tail_tol must be positive");
    if (exact() && convention() == MassConvention::kRaw) {
      throw ConfigError(
          "the raw mass needs mode=float: exact mode takes the effective mass lambda/c "
          "(c = (1-q)(q,-1,-q;q)_inf is irrational); use --effective-mass");
    }
  }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static Rational parse_checked(const char* key, const std::string& text) {
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument&) {
      throw ConfigError(std::string("bad value for '") + key + "': '" + text + "'");
    }
  }
};

}  // namespace qsob
