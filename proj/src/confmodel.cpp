#include "satcore/confmodel.hpp"

#include "satcore/stats.hpp"

namespace satcore {

ConfigInstance sample_configuration(const TypeCensus& census, Rng& rng) {
  ConfigInstance out;
  out.census = census;
  auto vars = census.num_vars();
  if (vars > UINT32_MAX) throw std::overflow_error("census has too many variables");

  std::vector<Literal> clones;
  clones.reserve(census.num_slots());
  std::uint32_t var = 0;
  for (const auto& [type, count] : census.counts()) {
    for (std::uint64_t c = 0; c < count; ++c) {
      ++var;
      clones.insert(clones.end(), type.first, Literal::positive(var));
      clones.insert(clones.end(), type.second, Literal::negative(var));
    }
  }
  rng.shuffle(std::span<Literal>(clones));

  out.formula = MultiFormula(static_cast<std::uint32_t>(vars), 2);
  out.formula.reserve(clones.size() / 2 + 1, clones.size());
  std::size_t i = 0;
  for (; i + 1 < clones.size(); i += 2) out.formula.add_clause({clones[i], clones[i + 1]});
  if (i < clones.size()) {
    out.formula.add_clause({clones[i]});
    out.defected = true;
  }
  out.simple = is_simple(out.formula);
  return out;
}

SimpleSamplingError::SimpleSamplingError(std::uint64_t tries)
    : std::runtime_error("no SIMPLE configuration after " + std::to_string(tries) + " tries"), tries_(tries) {}

SimpleSample sample_simple(const TypeCensus& census, Rng& rng, std::uint64_t max_tries) {
  for (std::uint64_t t = 1; t <= max_tries; ++t) {
    auto instance = sample_configuration(census, rng);
    if (instance.simple) return {std::move(instance), t};
  }
  throw SimpleSamplingError(max_tries);
}

ProportionEstimate estimate_sim_prob(const TypeCensus& census, std::uint64_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("estimate_sim_prob needs at least one trial");
  ProportionEstimate est;
  est.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (sample_configuration(census, rng).simple) ++est.successes;
  }
  est.p = static_cast<double>(est.successes) / static_cast<double>(trials);
  auto [lo, hi] = wilson_ci(est.successes, trials);
  est.lo = lo;
  est.hi = hi;
  return est;
}

}  // namespace satcore
