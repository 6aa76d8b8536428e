#pragma once

#include <cstdint>
#include <stdexcept>

#include "satcore/formula.hpp"
#include "satcore/rng.hpp"

namespace satcore {

/// A uniform perfect matching on the clones of a type census, contracted.
///
/// Variables are numbered 1..V in census order; a variable of type (i,j)
/// gets i clones of x and j clones of ~x.
struct ConfigInstance {
  TypeCensus census;
  MultiFormula formula;
  bool simple = false;
  /// The clone total was odd and one clone became a defected unit clause.
  bool defected = false;
};

ConfigInstance sample_configuration(const TypeCensus& census, Rng& rng);

class SimpleSamplingError : public std::runtime_error {
 public:
  explicit SimpleSamplingError(std::uint64_t tries);
  std::uint64_t tries() const { return tries_; }

 private:
  std::uint64_t tries_;
};

struct SimpleSample {
  ConfigInstance instance;
  std::uint64_t tries = 0;
};

/// Rejection sampling until the configuration is SIMPLE; throws
/// SimpleSamplingError after `max_tries` failures.
SimpleSample sample_simple(const TypeCensus& census, Rng& rng, std::uint64_t max_tries);

struct ProportionEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p = 0.0;
  double lo = 0.0;  ///< Wilson 95% interval
  double hi = 0.0;
};

ProportionEstimate estimate_sim_prob(const TypeCensus& census, std::uint64_t trials, Rng& rng);

}  // namespace satcore
