#pragma once

#include <cstdint>
#include <vector>

#include "satcore/formula.hpp"
#include "satcore/rng.hpp"

namespace satcore {

/// Number of possible clauses 2^k C(n,k); throws std::overflow_error if it
/// does not fit in 63 bits.
std::uint64_t clause_universe_size(std::uint32_t n, std::uint32_t k);

/// The clause with index `rank` in [0, 2^k C(n,k)): polarity bits in the low
/// k bits, the variable set by its colexicographic rank in the rest.
Clause unrank_clause(std::uint64_t rank, std::uint32_t n, std::uint32_t k);
std::uint64_t rank_clause(std::span<const Literal> clause, std::uint32_t n);

/// Classical model F(n,p;k): each of the 2^k C(n,k) clauses independently
/// with probability p. Draws the clause count from the exact binomial and
/// then a uniform subset of that size.
MultiFormula sample_classical(std::uint32_t n, double p, std::uint32_t k, Rng& rng);

/// Poisson cloning model F_PC(n,p;k) with lambda = p C(2n-1,k-1): Poi(2 lambda n)
/// clones with i.i.d. uniform literal labels, grouped uniformly into k-sets.
/// A remainder of r = N mod k clones forms one defected clause of arity r.
MultiFormula sample_poisson_cloning(std::uint32_t n, double lambda, std::uint32_t k, Rng& rng);

struct CellClone {
  Literal literal;
  double position = 0.0;
};

/// Poisson lambda-cell: per literal an i.i.d. Poi(lambda) number of clones,
/// each at an i.i.d. uniform position in [0, lambda]. Clones are stored grouped
/// by literal code, in generation order within a literal.
struct LambdaCell {
  std::uint32_t n = 0;
  double lambda = 0.0;
  std::vector<CellClone> clones;
};

LambdaCell build_lambda_cell(std::uint32_t n, double lambda, Rng& rng);

}  // namespace satcore
