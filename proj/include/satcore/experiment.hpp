#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "satcore/cola.hpp"
#include "satcore/formula.hpp"
#include "satcore/rng.hpp"
#include "satcore/stats.hpp"

namespace satcore {

enum class Experiment {
  CoreCensus,
  CoreSize,
  KernelSize,
  WindowSub,
  WindowSuper,
  CutoffTraj,
  ModelEquiv,
  SimProb,
  PlaThresholdK,
  SatOracle,
};

enum class Model { Classical, Cloning, Cola };
enum class Format { Json, Csv };

std::string to_string(Experiment e);
std::string to_string(Model m);
std::optional<Experiment> parse_experiment(const std::string& s);
std::optional<Model> parse_model(const std::string& s);

struct ExperimentConfig {
  Experiment experiment = Experiment::CoreSize;
  /// Variables; for sim-prob the number of type (1,1) variables. window-super
  /// uses `ns` instead.
  std::uint32_t n = 0;
  std::vector<std::uint32_t> ns;
  std::optional<double> lambda;
  /// lambda = 1 - sigma for window-sub and model-equiv, 1 + sigma otherwise.
  std::optional<double> sigma;
  int k = 2;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// Unset means the experiment's default model.
  std::optional<Model> model;
  bool record_trajectory = false;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rejects invalid combinations; returns the config with defaults filled in.
ExperimentConfig validate(ExperimentConfig config);

/// The lambda an experiment runs at after the sigma convention is applied.
double effective_lambda(const ExperimentConfig& config);

struct ExperimentReport {
  std::string experiment;
  nlohmann::ordered_json params;
  std::uint64_t trials = 0;
  std::vector<SummaryStats> metrics;
  /// Fits, ratios and constants that are not per-trial averages.
  nlohmann::ordered_json derived = nlohmann::ordered_json::object();
  /// Trace of trial 0 when trajectories are recorded.
  std::optional<ColaTrace> trace;

  const SummaryStats& metric(const std::string& name) const;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

/// SATCORE_WORKERS if set to a positive integer, else the hardware thread count.
unsigned worker_count();

/// Runs f(rng, trial) for every trial with rng = Rng(seed, trial) and returns
/// the results in trial order, whatever the number of workers.
template <typename F>
auto run_trials(std::uint64_t trials, std::uint64_t seed, F&& f, unsigned workers = worker_count())
    -> std::vector<decltype(f(std::declval<Rng&>(), std::uint64_t{}))> {
  using Result = decltype(f(std::declval<Rng&>(), std::uint64_t{}));
  std::vector<std::optional<Result>> slots(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      std::uint64_t t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        Rng rng(seed, t);
        slots[t].emplace(f(rng, t));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(trials);
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(trials, 1024))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(trials);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace satcore
