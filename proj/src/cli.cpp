#include "satcore/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "satcore/cola.hpp"
#include "satcore/confmodel.hpp"
#include "satcore/experiment.hpp"
#include "satcore/gen.hpp"
#include "satcore/reduce.hpp"
#include "satcore/report.hpp"
#include "satcore/sat.hpp"
#include "satcore/theory.hpp"

namespace satcore {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  std::vector<std::uint32_t> n;
  std::optional<double> lambda;
  std::optional<double> sigma;
  int k = 2;
  std::string model;
  std::string format = "json";
  std::string out;
  bool record_trajectory = false;
  bool timing = false;

  std::string in;
  std::string experiment;
  std::string regime = "sub";
  std::string census;
  std::string trace_out = "trajectory.csv";
};

std::uint32_t single_n(const Options& o) {
  if (o.n.size() != 1) throw UsageError("exactly one --n is required");
  return o.n.front();
}

double require_lambda(const Options& o) {
  if (!o.lambda) throw UsageError("--lambda is required");
  return *o.lambda;
}

MultiFormula read_input(const Options& o, std::istream& in) {
  auto arity = static_cast<std::uint32_t>(o.k);
  if (o.in.empty() || o.in == "-") return read_dimacs(in, arity);
  std::ifstream file(o.in);
  if (!file) throw std::runtime_error("cannot open " + o.in);
  return read_dimacs(file, arity);
}

// Writes to --out when given, else to the output stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json census_json(const TypeCensus& c) {
  Json types = Json::object();
  for (const auto& [type, count] : c.counts()) types[std::to_string(type.first) + "," + std::to_string(type.second)] = count;
  Json j;
  j["vars"] = c.num_vars();
  j["slots"] = c.num_slots();
  j["types"] = types;
  j["D11"] = c.D(1, 1);
  j["D21_union"] = c.D(2, 1) + c.D(1, 2) - c.D(2, 2);
  j["M11"] = c.M(1, 1);
  return j;
}

Json prediction_json(const theory::Prediction& p) { return {{"value", p.value}, {"scale", p.scale}}; }

Model require_model(const Options& o, Model fallback) {
  if (o.model.empty()) return fallback;
  auto m = parse_model(o.model);
  if (!m) throw UsageError("unknown model " + o.model);
  return *m;
}

int cmd_gen(const Options& o, std::ostream& out) {
  auto n = single_n(o);
  double lambda = require_lambda(o);
  Model model = require_model(o, Model::Cloning);
  if (o.k < 2) throw UsageError("--k must be at least 2");
  if (model == Model::Cola && o.k != 2) throw UsageError("the cola model is k = 2 only");
  Rng rng(o.seed);
  MultiFormula f;
  switch (model) {
    case Model::Classical:
      f = sample_classical(n, theory::clause_probability(n, lambda, o.k), static_cast<std::uint32_t>(o.k), rng);
      break;
    case Model::Cloning:
      f = sample_poisson_cloning(n, lambda, static_cast<std::uint32_t>(o.k), rng);
      break;
    case Model::Cola:
      f = core_via_cola(n, lambda, rng).formula;
      break;
  }
  emit(o, out, to_dimacs(f));
  return 0;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  auto f = read_input(o, in);
  auto stats = reduction_stats(f);
  Json j;
  j["input"] = {{"vars", f.num_vars()}, {"clauses", f.num_clauses()}};
  j["core"] = {{"vars", stats.core_vars}, {"clauses", stats.core_clauses}, {"census", census_json(stats.core_census)}};
  j["core_dimacs"] = to_dimacs(stats.pla.core);
  if (f.arity() == 2) {
    j["kernel"] = {{"vars", stats.kernel_vars},
                   {"clauses", stats.kernel_clauses},
                   {"resolved_vars", stats.kernel.resolved_vars},
                   {"census", census_json(stats.kernel_census)}};
    j["kernel_dimacs"] = to_dimacs(stats.kernel.kernel);
  }
  emit(o, out, dump(j));
  return 0;
}

int cmd_sat(const Options& o, std::istream& in, std::ostream& out) {
  auto f = read_input(o, in);
  if (f.arity() != 2) throw UsageError("sat decides 2-SAT only");
  auto verdict = decide_2sat(f);
  Json j;
  j["satisfiable"] = verdict.satisfiable;
  if (verdict.assignment) {
    Json lits = Json::array();
    for (std::uint32_t v = 1; v <= f.num_vars(); ++v) {
      lits.push_back((*verdict.assignment)[v - 1] ? std::int64_t{v} : -std::int64_t{v});
    }
    j["assignment"] = lits;
  }
  emit(o, out, dump(j));
  return 0;
}

int cmd_census(const Options& o, std::istream& in, std::ostream& out) {
  auto f = read_input(o, in);
  Json j;
  j["formula"] = census_json(census(f));
  j["core"] = census_json(census(pla_core(f).core));
  j["simple"] = is_simple(f);
  emit(o, out, dump(j));
  return 0;
}

int cmd_cola(const Options& o, std::ostream& out) {
  auto n = single_n(o);
  double lambda = require_lambda(o);
  Rng rng(o.seed);
  auto cell = build_lambda_cell(n, lambda, rng);
  auto outcome = run_cola_core(cell, rng);
  auto core = census(outcome.core_formula);
  Json j;
  j["n"] = n;
  j["lambda"] = lambda;
  j["clones"] = outcome.trace.total_clones;
  j["lambda_C"] = outcome.trace.lambda_C;
  j["no_pure_at_start"] = outcome.no_pure_at_start;
  if (lambda > 1.0) j["lambda_C_predicted"] = theory::theta_fixed_point(lambda).theta * lambda;
  j["core_vars"] = core.num_vars();
  j["core_clauses"] = outcome.core_formula.num_clauses();
  j["steps"] = outcome.trace.samples.size() - 1;
  if (o.record_trajectory) {
    std::ofstream file(o.trace_out);
    if (!file) throw std::runtime_error("cannot write " + o.trace_out);
    write_trace_csv(outcome.trace, file);
    j["trace"] = o.trace_out;
  }
  emit(o, out, dump(j));
  return 0;
}

int cmd_predict(const Options& o, std::ostream& out) {
  double lambda = o.lambda ? *o.lambda : 0.0;
  auto n = static_cast<double>(single_n(o));
  Json j;
  j["n"] = single_n(o);
  j["k"] = o.k;
  if (o.k >= 3) {
    auto t = theory::pla_threshold(o.k);
    j["lambda_k"] = t.lambda_k;
    j["rho_star"] = t.rho_star;
  }
  if (o.lambda) {
    auto fp = theory::theta_fixed_point(lambda, o.k);
    j["lambda"] = lambda;
    j["theta"] = fp.theta;
    j["theta_lambda"] = fp.theta * lambda;
    if (o.k == 2 && lambda > 1.0) {
      auto core = theory::predict_core(n, lambda);
      auto kernel = theory::predict_kernel(n, lambda);
      j["core_vars"] = prediction_json(core.core_vars);
      j["core_clauses"] = prediction_json(core.core_clauses);
      j["kernel_vars"] = prediction_json(kernel.kernel_vars);
      j["kernel_clauses"] = prediction_json(kernel.kernel_clauses);
      Json census = Json::object();
      for (auto [i, jj] : {std::pair{1u, 1u}, {1u, 2u}, {2u, 1u}, {2u, 2u}}) {
        auto c = theory::predict_census(n, lambda, i, jj);
        census[std::to_string(i) + "," + std::to_string(jj)] = {
            {"C", prediction_json(c.C)}, {"D_union", prediction_json(c.D_union)}, {"M", prediction_json(c.M)}};
      }
      j["census"] = census;
    } else if (o.k >= 3 && fp.theta > 0.0) {
      j["core_vars"] = std::pow(fp.theta, 2.0 / (o.k - 1)) * n;
    }
    double p = theory::clause_probability(n, lambda, o.k);
    auto c = theory::equiv_constants(n, p, o.k);
    j["p"] = p;
    j["c1"] = c.c1;
    j["c2"] = c.c2;
  }
  if (o.sigma && o.k == 2 && *o.sigma < 1.0) {
    auto w = theory::window_sub_probs(n, *o.sigma);
    j["window_sub"] = {{"sigma", *o.sigma},
                       {"sigma3n", w.sigma3n},
                       {"p_kernel_nonempty", w.p_kernel_nonempty},
                       {"p_unsat", w.p_unsat}};
  }
  if (!o.lambda && !o.sigma && o.k == 2) throw UsageError("predict needs --lambda or --sigma");
  emit(o, out, dump(j));
  return 0;
}

int emit_report(const Options& o, const ExperimentConfig& cfg, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  auto report = run_experiment(cfg);
  std::optional<double> runtime;
  if (o.timing) runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream text;
  if (o.format == "csv") {
    write_report_csv(report, text);
  } else {
    write_report_json(report, text, runtime);
  }
  emit(o, out, text.str());
  if (report.trace) {
    std::ofstream file(o.trace_out);
    if (!file) throw std::runtime_error("cannot write " + o.trace_out);
    write_trace_csv(*report.trace, file);
  }
  return 0;
}

ExperimentConfig config_from(const Options& o, Experiment e) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  if (e == Experiment::WindowSuper) {
    cfg.ns = o.n;
  } else {
    cfg.n = single_n(o);
  }
  cfg.lambda = o.lambda;
  cfg.sigma = o.sigma;
  cfg.k = o.k;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  if (!o.model.empty()) cfg.model = require_model(o, Model::Cloning);
  cfg.record_trajectory = o.record_trajectory;
  return cfg;
}

int cmd_window(const Options& o, std::ostream& out) {
  Experiment e;
  if (o.regime == "sub") {
    e = Experiment::WindowSub;
  } else if (o.regime == "super") {
    e = Experiment::WindowSuper;
  } else {
    throw UsageError("--regime must be sub or super");
  }
  return emit_report(o, config_from(o, e), out);
}

int cmd_sweep(const Options& o, std::ostream& out) {
  auto e = parse_experiment(o.experiment);
  if (!e) throw UsageError("unknown experiment " + o.experiment);
  return emit_report(o, config_from(o, *e), out);
}

TypeCensus parse_census(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '{') {
    std::ifstream file(spec);
    if (!file) throw UsageError("--census is neither JSON nor a readable file: " + spec);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("census JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("census JSON must map \"i,j\" to counts");
  TypeCensus c;
  for (const auto& [key, value] : j.items()) {
    unsigned i = 0;
    unsigned jj = 0;
    char comma = 0;
    std::istringstream ks(key);
    if (!(ks >> i >> comma >> jj) || comma != ',' || !ks.eof() || !value.is_number_unsigned()) {
      throw UsageError("bad census entry \"" + key + "\"");
    }
    if (i == 0 && jj == 0) throw UsageError("type (0,0) is not allowed in a census");
    c.add(i, jj, value.get<std::uint64_t>());
  }
  return c;
}

int cmd_simprob(const Options& o, std::ostream& out) {
  TypeCensus c;
  if (!o.census.empty()) {
    c = parse_census(o.census);
  } else {
    c.add(1, 1, single_n(o));
  }
  Rng rng(o.seed);
  auto est = estimate_sim_prob(c, o.trials, rng);
  Json j;
  j["census"] = census_json(c)["types"];
  j["trials"] = est.trials;
  j["successes"] = est.successes;
  j["p"] = est.p;
  j["ci"] = {est.lo, est.hi};
  j["limit"] = std::exp(-0.5);
  emit(o, out, dump(j));
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random 2-SAT simulation laboratory", "satcore"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--trials", o.trials, "Number of independent trials")->check(CLI::PositiveNumber);
  app.add_option("--n", o.n, "Number of variables (repeatable for window --regime super)");
  auto* lambda = app.add_option("--lambda", o.lambda, "Clone density lambda");
  auto* sigma = app.add_option("--sigma", o.sigma, "Window offset: lambda = 1 - sigma (sub) or 1 + sigma (super)");
  lambda->excludes(sigma);
  app.add_option("--k", o.k, "Clause width")->check(CLI::Range(2, 64));
  app.add_option("--model", o.model, "classical | cloning | cola")->check(CLI::IsMember({"classical", "cloning", "cola"}));
  app.add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_flag("--record-trajectory", o.record_trajectory, "Write the cut-off trace CSV to --trace-out");
  app.add_option("--trace-out", o.trace_out, "Trace CSV path");
  app.add_flag("--timing", o.timing, "Add runtime_seconds to reports");

  auto* gen = app.add_subcommand("gen", "Sample a formula and print it as DIMACS");
  auto* reduce = app.add_subcommand("reduce", "Core, kernel and census of a DIMACS formula");
  auto* sat = app.add_subcommand("sat", "Decide a 2-SAT DIMACS formula");
  auto* cola = app.add_subcommand("cola", "Run the cut-off line algorithm on a fresh lambda-cell");
  auto* predict = app.add_subcommand("predict", "Theoretical predictions");
  auto* cens = app.add_subcommand("census", "Type census of a DIMACS formula and its core");
  auto* window = app.add_subcommand("window", "Scaling-window experiment");
  auto* simprob = app.add_subcommand("simprob", "Estimate Pr[SIMPLE] for a configuration-model census");
  auto* sweep = app.add_subcommand("sweep", "Run a named experiment");
  for (auto* sub : {reduce, sat, cens}) sub->add_option("--in", o.in, "DIMACS input file (default stdin)");
  window->add_option("--regime", o.regime, "sub | super")->check(CLI::IsMember({"sub", "super"}));
  simprob->add_option("--census", o.census, "JSON map \"i,j\" -> count, or a file holding it");
  sweep->add_option("--experiment", o.experiment, "Experiment name")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (reduce->parsed()) return cmd_reduce(o, in, out);
    if (sat->parsed()) return cmd_sat(o, in, out);
    if (cola->parsed()) return cmd_cola(o, out);
    if (predict->parsed()) return cmd_predict(o, out);
    if (cens->parsed()) return cmd_census(o, in, out);
    if (window->parsed()) return cmd_window(o, out);
    if (simprob->parsed()) return cmd_simprob(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace satcore
