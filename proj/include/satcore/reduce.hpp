#pragma once

#include <cstdint>
#include <vector>

#include "satcore/formula.hpp"
#include "satcore/rng.hpp"

namespace satcore {

struct PlaResult {
  MultiFormula core;
  std::vector<Literal> satisfied_literals;  ///< in the order PLA set them true
  std::uint64_t removed_clauses = 0;
};

/// Pure literal algorithm run to its fixpoint.
///
/// Pure literals are processed from a FIFO worklist seeded in ascending
/// literal order. With `random_order` set, each step takes a uniformly random
/// pending literal instead; the resulting core is the same either way.
/// Works for clauses of any width.
PlaResult pla_core(const MultiFormula& f, Rng* random_order = nullptr);

bool pla_succeeds(const MultiFormula& f);

/// True iff some literal occurs while its negation does not.
bool has_pure_literal(const MultiFormula& f);

struct KernelResult {
  MultiFormula kernel;
  std::uint64_t resolved_vars = 0;
  /// (x or ~x) clauses of a type (1,1) variable x that were discarded.
  std::uint64_t dropped_degenerate = 0;
  /// (y or ~y) resolvents kept because y has further occurrences.
  std::uint64_t kept_tautologies = 0;
};

/// Resolves every type (1,1) variable of a core.
///
/// Degrees of all other variables are preserved, so the kernel's variables
/// are exactly the core variables of type >= (2,1) or >= (1,2). A (1,1)
/// variable whose two occurrences share one clause drops that clause;
/// resolving a unit (x) against (~x) yields the empty clause. Throws
/// std::invalid_argument on a pure literal or a clause wider than 2.
KernelResult kernel(const MultiFormula& core, Rng* random_order = nullptr);

/// Runs kernel() under `trials` random resolution orders and reports whether
/// all canonical kernels coincide.
bool kernel_order_invariance_check(const MultiFormula& core, unsigned trials, Rng& rng);

struct ReductionStats {
  PlaResult pla;
  KernelResult kernel;
  TypeCensus core_census;
  TypeCensus kernel_census;
  std::uint64_t core_vars = 0;
  std::uint64_t core_clauses = 0;
  std::uint64_t kernel_vars = 0;
  std::uint64_t kernel_clauses = 0;
};

/// F -> core -> kernel with censuses. Checks, on every input, that the
/// core's slot count is M(1,1) and that the kernel's slot count is
/// M(1,2) + M(2,1) - M(2,2) of the core census (throws std::logic_error
/// otherwise). For all-binary clauses these are the clause-count identities
/// |F_C| = M(1,1)/2 and |F_K| = (M(1,2) + M(2,1) - M(2,2))/2.
ReductionStats reduction_stats(const MultiFormula& f);

}  // namespace satcore
