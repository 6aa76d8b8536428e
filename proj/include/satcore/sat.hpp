#pragma once

#include <optional>
#include <vector>

#include "satcore/formula.hpp"

namespace satcore {

/// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

struct SatVerdict {
  bool satisfiable = false;
  std::optional<Assignment> assignment;  ///< present iff satisfiable
};

/// Implication-graph decision for clauses of width <= 2, with a witness.
/// Linear time; the strongly connected components are found iteratively.
/// An empty clause makes the formula unsatisfiable.
SatVerdict decide_2sat(const MultiFormula& f);

/// Exhaustive scan for n <= 24; returns the first satisfying assignment with
/// x1 as the most significant digit and false < true.
SatVerdict brute_force(const MultiFormula& f);

/// Throws std::invalid_argument if the assignment does not cover every
/// variable occurring in f.
bool verify_assignment(const MultiFormula& f, const Assignment& assignment);

}  // namespace satcore
