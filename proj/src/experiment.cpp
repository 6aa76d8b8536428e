#include "satcore/experiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "satcore/confmodel.hpp"
#include "satcore/gen.hpp"
#include "satcore/reduce.hpp"
#include "satcore/sat.hpp"
#include "satcore/theory.hpp"

namespace satcore {

namespace {

const std::map<Experiment, std::string>& experiment_names() {
  static const std::map<Experiment, std::string> names{
      {Experiment::CoreCensus, "core-census"},   {Experiment::CoreSize, "core-size"},
      {Experiment::KernelSize, "kernel-size"},   {Experiment::WindowSub, "window-sub"},
      {Experiment::WindowSuper, "window-super"}, {Experiment::CutoffTraj, "cutoff-traj"},
      {Experiment::ModelEquiv, "model-equiv"},   {Experiment::SimProb, "sim-prob"},
      {Experiment::PlaThresholdK, "pla-threshold-k"}, {Experiment::SatOracle, "sat-oracle"},
  };
  return names;
}

bool is_supercritical_size(Experiment e) {
  return e == Experiment::CoreCensus || e == Experiment::CoreSize || e == Experiment::KernelSize;
}

Model default_model(Experiment e) {
  switch (e) {
    case Experiment::WindowSub:
    case Experiment::WindowSuper:
    case Experiment::ModelEquiv:
    case Experiment::PlaThresholdK:
      return Model::Classical;
    case Experiment::CutoffTraj:
      return Model::Cola;
    default:
      return Model::Cloning;
  }
}

MultiFormula sample_formula(Model model, std::uint32_t n, double lambda, int k, Rng& rng) {
  auto kk = static_cast<std::uint32_t>(k);
  switch (model) {
    case Model::Classical:
      return sample_classical(n, theory::clause_probability(n, lambda, k), kk, rng);
    case Model::Cloning:
      return sample_poisson_cloning(n, lambda, kk, rng);
    case Model::Cola:
      return core_via_cola(n, lambda, rng).formula;
  }
  throw std::logic_error("unknown model");
}

// One column of per-trial values.
struct Column {
  std::string name;
  bool proportion = false;
};

using Row = std::vector<double>;

std::vector<SummaryStats> summarize_columns(const std::vector<Column>& columns, const std::vector<Row>& rows) {
  std::vector<SummaryStats> out;
  std::vector<double> values(rows.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) values[r] = rows[r][c];
    out.push_back(columns[c].proportion ? summarize_proportion(columns[c].name, values)
                                        : summarize(columns[c].name, values));
  }
  return out;
}

SummaryStats& find(std::vector<SummaryStats>& metrics, const std::string& name) {
  for (auto& m : metrics) {
    if (m.name == name) return m;
  }
  throw std::logic_error("no metric named " + name);
}

nlohmann::ordered_json interval_json(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) return nullptr;
  auto [lo, hi] = wilson_ci(hits, trials);
  return {lo, hi};
}

// Supercritical size and census runs ------------------------------------

void run_sizes(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double lambda = effective_lambda(cfg);
  const Model model = *cfg.model;
  const auto e = cfg.experiment;
  const bool with_core = e == Experiment::CoreSize;
  const bool with_kernel = e == Experiment::CoreSize || e == Experiment::KernelSize;
  const bool with_census = e == Experiment::CoreSize || e == Experiment::CoreCensus;

  std::vector<Column> columns;
  if (with_core) columns.insert(columns.end(), {{"core_vars"}, {"core_clauses"}});
  if (with_kernel) columns.insert(columns.end(), {{"kernel_vars"}, {"kernel_clauses"}});
  if (with_census) columns.insert(columns.end(), {{"C11"}, {"C12_plus_C21"}, {"C22"}, {"D21_union"}, {"M11"}});
  if (model == Model::Cola) columns.push_back({"lambda_C"});

  auto rows = run_trials(cfg.trials, cfg.seed, [&](Rng& rng, std::uint64_t) {
    Row row;
    MultiFormula f;
    double lambda_c = 0.0;
    if (model == Model::Cola) {
      auto cola = core_via_cola(cfg.n, lambda, rng);
      lambda_c = cola.lambda_C;
      f = std::move(cola.formula);
    } else {
      f = sample_formula(model, cfg.n, lambda, 2, rng);
    }
    auto stats = reduction_stats(f);
    const auto& c = stats.core_census;
    auto d = [](std::uint64_t x) { return static_cast<double>(x); };
    if (with_core) row.insert(row.end(), {d(stats.core_vars), d(stats.core_clauses)});
    if (with_kernel) row.insert(row.end(), {d(stats.kernel_vars), d(stats.kernel_clauses)});
    if (with_census) {
      row.insert(row.end(), {d(c.count(1, 1)), d(c.count(1, 2) + c.count(2, 1)), d(c.count(2, 2)),
                             d(c.D(2, 1) + c.D(1, 2) - c.D(2, 2)), d(c.M(1, 1))});
    }
    if (model == Model::Cola) row.push_back(lambda_c);
    return row;
  });
  report.metrics = summarize_columns(columns, rows);

  const double n = cfg.n;
  const double theta = theory::theta_fixed_point(lambda).theta;
  if (with_core) {
    auto core = theory::predict_core(n, lambda);
    attach_prediction(find(report.metrics, "core_vars"), core.core_vars.value, core.core_vars.scale);
    attach_prediction(find(report.metrics, "core_clauses"), core.core_clauses.value, core.core_clauses.scale);
  }
  if (with_kernel) {
    auto kernel = theory::predict_kernel(n, lambda);
    attach_prediction(find(report.metrics, "kernel_vars"), kernel.kernel_vars.value, kernel.kernel_vars.scale);
    attach_prediction(find(report.metrics, "kernel_clauses"), kernel.kernel_clauses.value,
                      kernel.kernel_clauses.scale);
  }
  if (with_census) {
    auto c11 = theory::predict_census(n, lambda, 1, 1);
    auto c12 = theory::predict_census(n, lambda, 1, 2);
    auto c22 = theory::predict_census(n, lambda, 2, 2);
    auto c21 = theory::predict_census(n, lambda, 2, 1);
    attach_prediction(find(report.metrics, "C11"), c11.C.value, c11.C.scale);
    attach_prediction(find(report.metrics, "C12_plus_C21"), 2.0 * c12.C.value, c12.C.scale);
    attach_prediction(find(report.metrics, "C22"), c22.C.value, c22.C.scale);
    attach_prediction(find(report.metrics, "D21_union"), c21.D_union.value, c21.D_union.scale);
    attach_prediction(find(report.metrics, "M11"), c11.M.value, c11.M.scale);
  }
  if (model == Model::Cola) {
    attach_prediction(find(report.metrics, "lambda_C"), theta * lambda, lambda / std::sqrt(theta * n));
  }
  report.derived["theta"] = theta;
}

// Scaling windows -----------------------------------------------------------

struct WindowOutcome {
  bool core_nonempty = false;
  bool kernel_nonempty = false;
  bool unsat = false;
};

WindowOutcome window_trial(Model model, std::uint32_t n, double lambda, Rng& rng) {
  auto f = sample_formula(model, n, lambda, 2, rng);
  auto pla = pla_core(f);
  WindowOutcome out;
  out.core_nonempty = !pla.core.empty();
  if (!out.core_nonempty) return out;
  auto k = kernel(pla.core).kernel;
  out.kernel_nonempty = !k.empty();
  if (out.kernel_nonempty) out.unsat = !decide_2sat(k).satisfiable;
  return out;
}

void run_window_sub(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double lambda = effective_lambda(cfg);
  auto rows = run_trials(cfg.trials, cfg.seed, [&](Rng& rng, std::uint64_t) {
    auto w = window_trial(*cfg.model, cfg.n, lambda, rng);
    return Row{double(w.core_nonempty), double(w.kernel_nonempty), double(w.unsat)};
  });
  report.metrics = summarize_columns({{"core_nonempty", true}, {"kernel_nonempty", true}, {"unsat", true}}, rows);

  std::uint64_t kernel_hits = 0;
  std::uint64_t unsat_hits = 0;
  for (const auto& r : rows) {
    kernel_hits += r[1] != 0.0;
    unsat_hits += r[2] != 0.0;
  }
  nlohmann::ordered_json cond;
  cond["unsat"] = unsat_hits;
  cond["kernel_nonempty"] = kernel_hits;
  cond["value"] = kernel_hits == 0 ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json(double(unsat_hits) / double(kernel_hits));
  cond["ci"] = interval_json(unsat_hits, kernel_hits);
  cond["predicted"] = 1.0 / 15.0;
  report.derived["unsat_given_kernel_nonempty"] = cond;

  if (cfg.sigma) {
    auto pred = theory::window_sub_probs(cfg.n, *cfg.sigma);
    attach_prediction(find(report.metrics, "kernel_nonempty"), pred.p_kernel_nonempty);
    attach_prediction(find(report.metrics, "unsat"), pred.p_unsat);
    report.derived["sigma3n"] = pred.sigma3n;
  }
}

void run_window_super(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double lambda = effective_lambda(cfg);
  const double sigma = lambda - 1.0;
  std::vector<WindowPoint> points;
  nlohmann::ordered_json per_n = nlohmann::ordered_json::array();
  for (std::uint32_t n : cfg.ns) {
    // Each system size gets its own master seed so sizes never share streams.
    auto rows = run_trials(cfg.trials, splitmix64(cfg.seed ^ splitmix64(n)), [&](Rng& rng, std::uint64_t) {
      auto w = window_trial(*cfg.model, n, lambda, rng);
      return Row{double(!w.unsat)};
    });
    auto metrics = summarize_columns({{"sat_n" + std::to_string(n), true}}, rows);
    WindowPoint p;
    p.sigma3n = sigma * sigma * sigma * n;
    p.trials = cfg.trials;
    for (const auto& r : rows) p.sat += r[0] != 0.0;
    points.push_back(p);
    per_n.push_back({{"n", n}, {"sigma3n", p.sigma3n}, {"sat", p.sat}, {"trials", p.trials}});
    report.metrics.push_back(metrics.front());
  }
  report.derived["points"] = per_n;
  nlohmann::ordered_json fit_json;
  try {
    auto fit = window_super_slope(points);
    fit_json["slope"] = fit.slope;
    fit_json["slope_stderr"] = fit.slope_stderr;
    fit_json["intercept"] = fit.intercept;
    fit_json["within_bounds"] = fit.within_bounds;
  } catch (const InsufficientDataError& e) {
    fit_json["slope"] = nullptr;
    fit_json["error"] = e.what();
  }
  report.derived["fit"] = fit_json;
}

// Cut-off trajectory --------------------------------------------------------

constexpr std::array<double, 3> kTrajectoryThetas{0.95, 0.9, 0.8};

void run_cutoff_traj(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double lambda = effective_lambda(cfg);
  const double n = cfg.n;
  struct TrialOut {
    Row row;
    std::optional<ColaTrace> trace;
  };
  auto outs = run_trials(cfg.trials, cfg.seed, [&](Rng& rng, std::uint64_t t) {
    auto cola = core_via_cola(cfg.n, lambda, rng);
    auto points = trajectory(cola.trace, kTrajectoryThetas);
    TrialOut out;
    out.row.push_back(cola.lambda_C);
    double worst = 0.0;
    for (const auto& p : points) {
      double dev = static_cast<double>(p.matched) - 2.0 * (1.0 - p.theta * p.theta) * lambda * n;
      out.row.push_back(dev);
      worst = std::max(worst, std::abs(dev));
    }
    out.row.push_back(worst / std::sqrt(n));
    out.row.push_back(double(worst <= 10.0 * std::sqrt(n)));
    if (cfg.record_trajectory && t == 0) out.trace = std::move(cola.trace);
    return out;
  });
  std::vector<Row> rows;
  for (auto& o : outs) {
    rows.push_back(std::move(o.row));
    if (o.trace) report.trace = std::move(o.trace);
  }
  std::vector<Column> columns{{"lambda_C"}};
  for (double th : kTrajectoryThetas) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "N_dev_theta%.2f", th);
    columns.push_back({buf});
  }
  columns.push_back({"sup_dev_over_sqrt_n"});
  columns.push_back({"sup_dev_within_10sqrt_n", true});
  report.metrics = summarize_columns(columns, rows);

  if (lambda > 1.0) {
    double theta = theory::theta_fixed_point(lambda).theta;
    attach_prediction(report.metrics[0], theta * lambda, lambda / std::sqrt(theta * n));
    report.derived["theta"] = theta;
  }
  for (std::size_t i = 0; i < kTrajectoryThetas.size(); ++i) attach_prediction(report.metrics[1 + i], 0.0, std::sqrt(n));
}

// Model comparison ----------------------------------------------------------

void run_model_equiv(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double lambda = effective_lambda(cfg);
  auto rows = run_trials(cfg.trials, cfg.seed, [&](Rng& rng, std::uint64_t) {
    Rng classical_rng = rng.substream(1);
    Rng cloning_rng = rng.substream(2);
    auto cl = window_trial(Model::Classical, cfg.n, lambda, classical_rng);
    auto f = sample_poisson_cloning(cfg.n, lambda, 2, cloning_rng);
    bool standard = is_standard(f);
    auto pla = pla_core(f);
    bool kernel_nonempty = false;
    bool unsat = false;
    if (!pla.core.empty()) {
      auto k = kernel(pla.core).kernel;
      kernel_nonempty = !k.empty();
      unsat = kernel_nonempty && !decide_2sat(k).satisfiable;
    }
    return Row{double(cl.unsat),
               double(cl.kernel_nonempty),
               double(unsat),
               double(kernel_nonempty),
               double(standard),
               double(unsat && standard),
               double(kernel_nonempty && standard)};
  });
  report.metrics = summarize_columns({{"unsat_classical", true},
                                      {"kernel_nonempty_classical", true},
                                      {"unsat_cloning", true},
                                      {"kernel_nonempty_cloning", true},
                                      {"standard_cloning", true},
                                      {"unsat_and_standard_cloning", true},
                                      {"kernel_nonempty_and_standard_cloning", true}},
                                     rows);

  double p = theory::clause_probability(cfg.n, lambda, 2);
  auto c = theory::equiv_constants(cfg.n, p, 2);
  report.derived["p"] = p;
  report.derived["c1"] = c.c1;
  report.derived["c2"] = c.c2;
  for (std::string event : {"unsat", "kernel_nonempty"}) {
    const auto& cl = find(report.metrics, event + "_classical");
    const auto& pc = find(report.metrics, event + "_and_standard_cloning");
    nlohmann::ordered_json e;
    e["classical"] = cl.mean;
    e["cloning_standard"] = pc.mean;
    e["ratio"] = pc.mean > 0.0 ? nlohmann::ordered_json(cl.mean / pc.mean) : nlohmann::ordered_json(nullptr);
    // Each side of the sandwich may use the favourable end of its interval.
    e["lower_holds"] = c.c1 * pc.ci_lo <= cl.ci_hi;
    e["upper_holds"] = cl.ci_lo <= c.c2 * pc.ci_hi;
    report.derived[event] = e;
  }
}

// SIMPLE probability ----------------------------------------------------------

void run_sim_prob(const ExperimentConfig& cfg, ExperimentReport& report) {
  TypeCensus census;
  census.add(1, 1, cfg.n);
  auto rows = run_trials(cfg.trials, cfg.seed, [&](Rng& rng, std::uint64_t) {
    return Row{double(sample_configuration(census, rng).simple)};
  });
  report.metrics = summarize_columns({{"simple", true}}, rows);
  attach_prediction(report.metrics[0], std::exp(-0.5));
}

// PLA for k >= 3 ------------------------------------------------------------

void run_pla_threshold(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double lambda = effective_lambda(cfg);
  auto rows = run_trials(cfg.trials, cfg.seed, [&](Rng& rng, std::uint64_t) {
    auto f = sample_formula(*cfg.model, cfg.n, lambda, cfg.k, rng);
    auto pla = pla_core(f);
    auto c = census(pla.core);
    return Row{double(pla.core.empty()), double(c.num_vars()), double(pla.core.num_clauses())};
  });
  report.metrics = summarize_columns({{"pla_success", true}, {"core_vars"}, {"core_clauses"}}, rows);
  auto threshold = theory::pla_threshold(cfg.k);
  auto fp = theory::theta_fixed_point(lambda, cfg.k);
  double frac = fp.theta > 0.0 ? std::pow(fp.theta, 2.0 / (cfg.k - 1)) : 0.0;
  attach_prediction(report.metrics[1], frac * cfg.n, std::sqrt(double(cfg.n)));
  report.derived["lambda_k"] = threshold.lambda_k;
  report.derived["rho_star"] = threshold.rho_star;
  report.derived["theta"] = fp.theta;
}

// Decider cross-check ---------------------------------------------------------

void run_sat_oracle(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double lambda = effective_lambda(cfg);
  auto rows = run_trials(cfg.trials, cfg.seed, [&](Rng& rng, std::uint64_t) {
    auto f = sample_formula(*cfg.model, cfg.n, lambda, 2, rng);
    auto fast = decide_2sat(f);
    auto slow = brute_force(f);
    bool agree = fast.satisfiable == slow.satisfiable;
    if (agree && fast.satisfiable) agree = verify_assignment(f, *fast.assignment);
    return Row{double(agree), double(slow.satisfiable)};
  });
  report.metrics = summarize_columns({{"agree", true}, {"sat", true}}, rows);
  attach_prediction(report.metrics[0], 1.0);
}

}  // namespace

std::string to_string(Experiment e) { return experiment_names().at(e); }

std::string to_string(Model m) {
  switch (m) {
    case Model::Classical:
      return "classical";
    case Model::Cloning:
      return "cloning";
    case Model::Cola:
      return "cola";
  }
  return "?";
}

std::optional<Experiment> parse_experiment(const std::string& s) {
  for (const auto& [e, name] : experiment_names()) {
    if (name == s) return e;
  }
  return std::nullopt;
}

std::optional<Model> parse_model(const std::string& s) {
  if (s == "classical") return Model::Classical;
  if (s == "cloning") return Model::Cloning;
  if (s == "cola") return Model::Cola;
  return std::nullopt;
}

double effective_lambda(const ExperimentConfig& config) {
  if (config.lambda) return *config.lambda;
  if (!config.sigma) throw ConfigError("one of lambda or sigma is required");
  bool below = config.experiment == Experiment::WindowSub || config.experiment == Experiment::ModelEquiv;
  return below ? 1.0 - *config.sigma : 1.0 + *config.sigma;
}

ExperimentConfig validate(ExperimentConfig cfg) {
  const auto e = cfg.experiment;
  const std::string name = to_string(e);
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  if (e == Experiment::SimProb) {
    if (cfg.lambda || cfg.sigma) throw ConfigError("sim-prob takes no lambda or sigma");
  } else {
    if (cfg.lambda.has_value() == cfg.sigma.has_value()) throw ConfigError(name + " needs exactly one of lambda or sigma");
    if (cfg.lambda && !(*cfg.lambda > 0.0)) throw ConfigError("lambda must be positive");
    if (cfg.sigma && !(*cfg.sigma > 0.0)) throw ConfigError("sigma must be positive");
    if (cfg.sigma && *cfg.sigma >= 1.0 && (e == Experiment::WindowSub || e == Experiment::ModelEquiv)) {
      throw ConfigError("sigma must be below 1 when lambda = 1 - sigma");
    }
  }
  if (e == Experiment::WindowSuper) {
    if (cfg.ns.empty() && cfg.n > 0) cfg.ns.push_back(cfg.n);
    if (cfg.ns.empty()) throw ConfigError("window-super needs at least one n");
    for (auto n : cfg.ns) {
      if (n < 2) throw ConfigError("n must be at least 2");
    }
  } else {
    if (cfg.ns.size() > 1) throw ConfigError(name + " takes a single n");
    if (cfg.ns.size() == 1) cfg.n = cfg.ns.front();
    if (cfg.n < 2) throw ConfigError("n must be at least 2");
  }

  if (e == Experiment::PlaThresholdK) {
    if (cfg.k < 3) throw ConfigError("pla-threshold-k needs k >= 3");
  } else if (cfg.k != 2 && e != Experiment::SimProb) {
    throw ConfigError(name + " is defined for k = 2 only");
  }

  if (!cfg.model) cfg.model = default_model(e);
  if (e == Experiment::CutoffTraj && *cfg.model != Model::Cola) throw ConfigError("cutoff-traj runs the cola model");
  if (e == Experiment::ModelEquiv && *cfg.model != Model::Classical) {
    throw ConfigError("model-equiv always compares both models; omit --model");
  }
  if (e == Experiment::PlaThresholdK && *cfg.model == Model::Cola) throw ConfigError("the cola model is k = 2 only");
  if ((e == Experiment::WindowSub || e == Experiment::WindowSuper) && *cfg.model == Model::Cola) {
    throw ConfigError("window experiments use the classical or cloning model");
  }
  if (is_supercritical_size(e) && !(effective_lambda(cfg) > 1.0)) {
    throw ConfigError(name + " needs lambda > 1 (the core is empty below)");
  }
  if (e == Experiment::WindowSub && effective_lambda(cfg) >= 1.0) throw ConfigError("window-sub needs lambda < 1");
  if (e == Experiment::WindowSuper && effective_lambda(cfg) <= 1.0) throw ConfigError("window-super needs lambda > 1");
  if (e == Experiment::SatOracle && cfg.n > 20) throw ConfigError("sat-oracle brute force supports n <= 20");
  if (e != Experiment::SimProb && *cfg.model == Model::Classical) {
    for (auto n : e == Experiment::WindowSuper ? cfg.ns : std::vector<std::uint32_t>{cfg.n}) {
      try {
        theory::clause_probability(n, effective_lambda(cfg), cfg.k);
        clause_universe_size(n, static_cast<std::uint32_t>(cfg.k));
      } catch (const std::exception& ex) {
        throw ConfigError(ex.what());
      }
    }
  }
  if (cfg.record_trajectory && e != Experiment::CutoffTraj) {
    throw ConfigError("--record-trajectory applies to cutoff-traj only");
  }
  return cfg;
}

const SummaryStats& ExperimentReport::metric(const std::string& name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return m;
  }
  throw std::out_of_range("report has no metric " + name);
}

unsigned worker_count() {
  if (const char* env = std::getenv("SATCORE_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ExperimentReport run_experiment(const ExperimentConfig& input) {
  auto cfg = validate(input);
  ExperimentReport report;
  report.experiment = to_string(cfg.experiment);
  report.trials = cfg.trials;

  auto& params = report.params;
  if (cfg.experiment == Experiment::WindowSuper) {
    params["n"] = cfg.ns;
  } else {
    params["n"] = cfg.n;
  }
  if (cfg.lambda) params["lambda"] = *cfg.lambda;
  if (cfg.sigma) params["sigma"] = *cfg.sigma;
  if (cfg.experiment != Experiment::SimProb) params["effective_lambda"] = effective_lambda(cfg);
  params["k"] = cfg.k;
  if (cfg.experiment == Experiment::ModelEquiv) {
    params["model"] = "classical+cloning";
  } else if (cfg.experiment == Experiment::SimProb) {
    params["model"] = "configuration";
  } else {
    params["model"] = to_string(*cfg.model);
  }
  params["seed"] = cfg.seed;
  params["record_trajectory"] = cfg.record_trajectory;

  switch (cfg.experiment) {
    case Experiment::CoreCensus:
    case Experiment::CoreSize:
    case Experiment::KernelSize:
      run_sizes(cfg, report);
      break;
    case Experiment::WindowSub:
      run_window_sub(cfg, report);
      break;
    case Experiment::WindowSuper:
      run_window_super(cfg, report);
      break;
    case Experiment::CutoffTraj:
      run_cutoff_traj(cfg, report);
      break;
    case Experiment::ModelEquiv:
      run_model_equiv(cfg, report);
      break;
    case Experiment::SimProb:
      run_sim_prob(cfg, report);
      break;
    case Experiment::PlaThresholdK:
      run_pla_threshold(cfg, report);
      break;
    case Experiment::SatOracle:
      run_sat_oracle(cfg, report);
      break;
  }
  return report;
}

}  // namespace satcore
