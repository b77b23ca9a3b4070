#pragma once

// Command-line front end: hermite, sobolev, verify, eval.
// Exit codes: 0 success, 1 invariant failure, 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsob/config.hpp"
#include "qsob/io.hpp"
#include "qsob/ladder.hpp"
#include "qsob/verify.hpp"

namespace qsob::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr long kDefaultTableDegree = 5;

struct EvalRequest {
  std::string target;
  long n = 0;
  std::string x;
  int i = 0;
  int j = 0;
  std::string y = "0";
};

template <Scalar S>
QContext<S> make_context(const RunConfig& cfg) {
  if constexpr (ExactScalar<S>) {
    return ExactContext::exact(cfg.q_value());
  } else {
    return FloatContext::floating(cfg.q_value(), cfg.precision_bits, cfg.tail_tol_value());
  }
}

template <Scalar S>
SobolevParams<S> make_params(const RunConfig& cfg, const QContext<S>& ctx) {
  if (!cfg.alpha || !cfg.mass) throw ConfigError("this command needs alpha and a mass (--mass or --effective-mass)");
  try {
    return SobolevParams<S>::make(ctx.lift(cfg.alpha_value()), ctx.lift(cfg.mass_value()), cfg.convention());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

template <Scalar S>
int cmd_hermite(const RunConfig& cfg, std::ostream& out) {
  const long n_max = cfg.n_max_value(kDefaultTableDegree);
  const HermiteFamily<S> fam(make_context<S>(cfg), n_max);
  if (cfg.output == "csv") {
    out << io::hermite_table_csv(fam, n_max);
  } else {
    out << io::hermite_table_json(fam, n_max).dump(2) << "\n";
  }
  return kExitOk;
}

template <Scalar S>
int cmd_sobolev(const RunConfig& cfg, bool with_coeffs, std::ostream& out) {
  if (with_coeffs && !ExactScalar<S>) throw ConfigError("--coeffs requires mode=exact");
  const long n_max = cfg.n_max_value(kDefaultTableDegree);
  auto ctx = make_context<S>(cfg);
  auto params = make_params(cfg, ctx);
  const SobolevFamily<S> sfam(std::make_shared<HermiteFamily<S>>(std::move(ctx), n_max), std::move(params));
  if (cfg.output == "csv") {
    out << io::sobolev_table_csv(sfam, n_max);
  } else {
    out << io::sobolev_table_json(sfam, n_max, with_coeffs).dump(2) << "\n";
  }
  return kExitOk;
}

template <Scalar S>
int cmd_eval(const RunConfig& cfg, const EvalRequest& req, std::ostream& out) {
  if (req.n < 0) throw ConfigError("--n must be non-negative");
  auto ctx = make_context<S>(cfg);
  const S x = io::parse_scalar(req.x, ctx);
  const auto fam = std::make_shared<HermiteFamily<S>>(ctx, req.n);
  S value;
  if (req.target == "H") {
    value = fam->eval(req.n, x);
  } else if (req.target == "kernel") {
    value = fam->kernel_poly(req.n, req.i, req.j, io::parse_scalar(req.y, ctx)).eval(x);
  } else {
    const SobolevFamily<S> sfam(fam, make_params(cfg, ctx));
    if (req.target == "S") {
      value = sfam.s_poly(req.n).eval(x);
    } else {
      if (req.n < 1) throw ConfigError("DqS needs --n >= 1");
      value = sfam.dq_s_poly(req.n).eval(x);
    }
  }
  out << to_string(value) << "\n";
  return kExitOk;
}

inline verify::VerifyOptions verify_options(const RunConfig& cfg, bool canary) {
  verify::VerifyOptions o;
  if (cfg.q) {
    o.qs = {cfg.q_value()};
    o.float_qs = {cfg.q_value()};
  }
  if (cfg.alpha) o.alphas = {cfg.alpha_value()};
  if (cfg.mass) {
    if (cfg.convention() == MassConvention::kRaw) throw ConfigError("verify takes the effective mass (--effective-mass)");
    o.masses = {cfg.mass_value()};
  }
  o.n_max = cfg.n_max;
  o.precision_bits = cfg.precision_bits;
  o.tail_tol = cfg.tail_tol_value();
  o.seed = cfg.seed;
  o.canary = canary;
  return o;
}

inline int cmd_verify(const RunConfig& cfg, std::vector<std::string> suites, bool canary, std::ostream& out,
                      std::ostream& err) {
  if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = verify::suite_names();
  const verify::VerifyOptions options = verify_options(cfg, canary);
  std::vector<verify::VerifyReport> reports;
  std::size_t failed = 0;
  for (const auto& name : suites) {
    reports.push_back(verify::run_suite(name, options));
    failed += reports.back().failed();
  }
  if (cfg.output == "csv") {
    out << io::csv_line({"suite", "invariant", "params", "status", "witness"});
    for (const auto& r : reports) {
      for (const auto& c : r.cases) {
        std::string params = c.params.dump();
        std::replace(params.begin(), params.end(), ',', ';');
        std::string witness = c.witness;
        std::replace(witness.begin(), witness.end(), ',', ';');
        out << io::csv_line({r.suite, c.invariant, params, c.passed ? "PASS" : "FAIL", witness});
      }
    }
  } else {
    json arr = json::array();
    std::size_t total = 0;
    for (const auto& r : reports) {
      arr.push_back(r.to_json());
      total += r.cases.size();
    }
    out << json{{"reports", arr}, {"summary", {{"total", total}, {"passed", total - failed}, {"failed", failed}}}}.dump(2)
        << "\n";
  }
  for (const auto& r : reports) {
    err << "verify " << r.suite << ": " << r.passed() << " passed, " << r.failed() << " failed\n";
    for (const auto& c : r.cases) {
      if (!c.passed) err << "  FAIL " << c.invariant << " " << c.params.dump() << ": " << c.witness << "\n";
    }
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

/// Parses argv and runs one subcommand, writing results to `out` and diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-Hermite I and Sobolev-type polynomials: tables, evaluation and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> q, alpha, raw_mass, effective_mass, mode, tail_tol, output;
  std::optional<long> n_max, precision_bits;
  std::optional<unsigned long> seed;
  app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);
  app.add_option("--q", q, "q in (0,1), rational or decimal");
  app.add_option("--alpha", alpha, "mass point, |alpha| > 1");
  auto* raw_opt = app.add_option("--mass", raw_mass, "raw mass lambda (mode=float only)");
  auto* eff_opt = app.add_option("--effective-mass", effective_mass, "effective mass lambda/c");
  raw_opt->excludes(eff_opt);
  app.add_option("--n-max", n_max, "highest degree");
  app.add_option("--mode", mode, "exact | float");
  app.add_option("--precision-bits", precision_bits, "float mode precision");
  app.add_option("--tail-tol", tail_tol, "float mode truncation tolerance");
  app.add_option("--output", output, "json | csv");
  app.add_option("--seed", seed, "seed for randomized checks");

  app.add_subcommand("hermite", "H_0..H_{n_max} with gamma_n and nu_n");

  auto* sobolev = app.add_subcommand("sobolev", "S_0..S_{n_max} and (D_q S_n)(alpha)");
  bool with_coeffs = false;
  sobolev->add_flag("--coeffs", with_coeffs, "include the connection coefficients E/F/Xi");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  bool canary = false;
  verify_cmd->add_option("suites", suites, "qcalc hermite kernels sobolev ladder all")
      ->check(CLI::IsMember({"qcalc", "hermite", "kernels", "sobolev", "ladder", "all"}));
  verify_cmd->add_flag("--canary", canary, "corrupt E4 in the ladder suite (must fail)");

  auto* eval = app.add_subcommand("eval", "evaluate H, S, DqS or kernel at a point");
  EvalRequest req;
  eval->add_option("target", req.target, "H | S | DqS | kernel")
      ->required()
      ->check(CLI::IsMember({"H", "S", "DqS", "kernel"}));
  eval->add_option("--n", req.n, "degree")->required();
  eval->add_option("--x", req.x, "evaluation point")->required();
  eval->add_option("--i", req.i, "kernel x-derivative order (0 or 1)")->check(CLI::Range(0, 1));
  eval->add_option("--j", req.j, "kernel y-derivative order (0 or 1)")->check(CLI::Range(0, 1));
  eval->add_option("--y", req.y, "kernel second argument");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    if (q) cfg.set("q", *q);
    if (alpha) cfg.set("alpha", *alpha);
    if (raw_mass) {
      cfg.set("mass", *raw_mass);
      cfg.set("mass_convention", "raw");
    }
    if (effective_mass) {
      cfg.set("mass", *effective_mass);
      cfg.set("mass_convention", "effective");
    }
    if (n_max) cfg.n_max = *n_max;
    if (mode) cfg.set("mode", *mode);
    if (precision_bits) cfg.precision_bits = *precision_bits;
    if (tail_tol) cfg.set("tail_tol", *tail_tol);
    if (output) cfg.set("output", *output);
    if (seed) cfg.seed = *seed;
    cfg.validate();

    if (app.got_subcommand("hermite")) return cfg.exact() ? cmd_hermite<Rational>(cfg, out) : cmd_hermite<Real>(cfg, out);
    if (app.got_subcommand("sobolev")) {
      return cfg.exact() ? cmd_sobolev<Rational>(cfg, with_coeffs, out) : cmd_sobolev<Real>(cfg, with_coeffs, out);
    }
    if (app.got_subcommand("eval")) return cfg.exact() ? cmd_eval<Rational>(cfg, req, out) : cmd_eval<Real>(cfg, req, out);
    return cmd_verify(cfg, suites, canary, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace qsob::cli
