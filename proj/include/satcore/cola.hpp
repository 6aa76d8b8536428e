#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "satcore/formula.hpp"
#include "satcore/gen.hpp"
#include "satcore/rng.hpp"

namespace satcore {

/// State after one matching step of the cut-off line algorithm.
struct CutoffSample {
  std::uint64_t matched = 0;  ///< clones matched so far
  double cutoff = 0.0;        ///< current cut-off value
  std::uint64_t light = 0;    ///< unmatched clones of pure literals
  std::uint64_t heavy = 0;    ///< other unmatched clones
};

struct ColaTrace {
  double lambda = 0.0;
  std::uint32_t n = 0;
  std::uint64_t total_clones = 0;
  /// samples[0] is the initial state (nothing matched, cut-off at lambda).
  std::vector<CutoffSample> samples;
  /// Cut-off value when no light clone remains for the first time.
  double lambda_C = 0.0;
  /// Index into samples of the state at lambda_C.
  std::size_t core_start = 0;
};

struct ColaOutcome {
  MultiFormula formula;       ///< every contracted matching edge
  MultiFormula core_formula;  ///< edges formed after lambda_C
  std::vector<std::uint32_t> core_support;  ///< cell indices unmatched at lambda_C
  ColaTrace trace;
  /// The initial cell had no pure literal, so lambda_C = lambda by convention.
  bool no_pure_at_start = false;
};

/// Cut-off line algorithm for the core on a fresh lambda-cell.
///
/// Clones of pure literals are matched, one at a time, to the largest other
/// unmatched clone until no pure literal is left (lambda_C). The rest of the
/// matching is completed with free steps: a uniformly chosen unmatched clone
/// is matched to the largest other one. A single leftover clone becomes the
/// defected unit clause.
ColaOutcome run_cola_core(const LambdaCell& cell, Rng& rng);

struct TrajectoryPoint {
  double theta = 0.0;
  std::uint64_t matched = 0;  ///< N(theta): clones matched when the cut-off first reaches theta*lambda
  double cutoff = 0.0;        ///< Lambda(theta): cut-off when 2(1-theta^2) lambda n clones are first matched
};

/// Resamples a trace on a theta grid; theta must lie in (0, 1].
std::vector<TrajectoryPoint> trajectory(const ColaTrace& trace, std::span<const double> thetas);

/// CSV with header step,matched,cutoff,light,heavy.
void write_trace_csv(const ColaTrace& trace, std::ostream& out);

struct ColaCore {
  MultiFormula formula;
  MultiFormula core_formula;
  double lambda_C = 0.0;
  ColaTrace trace;
};

ColaCore core_via_cola(std::uint32_t n, double lambda, Rng& rng);

}  // namespace satcore
