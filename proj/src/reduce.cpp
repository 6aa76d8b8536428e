#include "satcore/reduce.hpp"

#include <array>
#include <stdexcept>

namespace satcore {

PlaResult pla_core(const MultiFormula& f, Rng* random_order) {
  const std::size_t literals = 2 * static_cast<std::size_t>(f.num_vars());
  const std::size_t m = f.num_clauses();
  auto deg = degrees(f).d;

  // Clause ids per literal, one entry per slot.
  std::vector<std::uint32_t> first(literals + 1, 0);
  for (std::size_t y = 0; y < literals; ++y) first[y + 1] = first[y] + deg[y];
  std::vector<std::uint32_t> occ(first.back());
  {
    std::vector<std::uint32_t> fill(first.begin(), first.end() - 1);
    for (std::uint32_t c = 0; c < m; ++c) {
      for (Literal y : f.clause(c)) occ[fill[y.code()]++] = c;
    }
  }

  std::vector<std::uint8_t> alive(m, 1);
  std::vector<std::uint8_t> queued(literals, 0);
  std::vector<std::uint32_t> work;
  std::size_t head = 0;
  auto enqueue = [&](std::uint32_t y) {
    if (!queued[y]) {
      queued[y] = 1;
      work.push_back(y);
    }
  };
  for (std::uint32_t y = 0; y < literals; ++y) {
    if (deg[y] > 0 && deg[y ^ 1u] == 0) enqueue(y);
  }

  PlaResult result;
  while (head < work.size()) {
    std::uint32_t y;
    if (random_order != nullptr) {
      std::size_t pick = head + random_order->below(work.size() - head);
      std::swap(work[head], work[pick]);
    }
    y = work[head++];
    if (deg[y] == 0) continue;  // its clauses went away with other literals
    result.satisfied_literals.push_back(Literal::from_code(y));
    for (auto i = first[y]; i < first[y + 1]; ++i) {
      std::uint32_t c = occ[i];
      if (!alive[c]) continue;
      alive[c] = 0;
      ++result.removed_clauses;
      for (Literal z : f.clause(c)) {
        if (--deg[z.code()] == 0 && deg[z.code() ^ 1u] > 0) enqueue(z.code() ^ 1u);
      }
    }
  }

  result.core = MultiFormula(f.num_vars(), f.arity());
  result.core.reserve(m - result.removed_clauses, 2 * (m - result.removed_clauses));
  for (std::uint32_t c = 0; c < m; ++c) {
    if (alive[c]) result.core.add_clause(f.clause(c));
  }
  return result;
}

bool pla_succeeds(const MultiFormula& f) { return pla_core(f).core.empty(); }

bool has_pure_literal(const MultiFormula& f) {
  auto deg = degrees(f);
  for (std::size_t y = 0; y < deg.d.size(); ++y) {
    if (deg.d[y] > 0 && deg.d[y ^ 1u] == 0) return true;
  }
  return false;
}

KernelResult kernel(const MultiFormula& core, Rng* random_order) {
  struct Slots {
    std::array<Literal, 2> lit;
    std::uint8_t size = 0;
    bool alive = true;
  };
  const std::size_t m = core.num_clauses();
  std::vector<Slots> clauses(m);
  for (std::size_t c = 0; c < m; ++c) {
    auto lits = core.clause(c);
    if (lits.size() > 2) throw std::invalid_argument("kernel: clause wider than 2");
    clauses[c].size = static_cast<std::uint8_t>(lits.size());
    for (std::size_t s = 0; s < lits.size(); ++s) clauses[c].lit[s] = lits[s];
  }
  auto deg = degrees(core).d;
  for (std::size_t y = 0; y < deg.size(); ++y) {
    if (deg[y] > 0 && deg[y ^ 1u] == 0) {
      throw std::invalid_argument("kernel: input has pure literal " +
                                  std::to_string(Literal::from_code(static_cast<std::uint32_t>(y)).to_dimacs()));
    }
  }

  // Only literals of type (1,1) variables need a home clause; it moves when
  // the clause holding it is merged into another.
  std::vector<std::uint32_t> neutral;
  std::vector<std::uint32_t> home(deg.size(), 0);
  std::vector<std::uint8_t> pending(core.num_vars(), 0);
  for (std::uint32_t v = 0; v < core.num_vars(); ++v) {
    if (deg[2 * v] == 1 && deg[2 * v + 1] == 1) {
      neutral.push_back(v);
      pending[v] = 1;
    }
  }
  for (std::uint32_t c = 0; c < m; ++c) {
    for (std::size_t s = 0; s < clauses[c].size; ++s) {
      Literal y = clauses[c].lit[s];
      if (pending[y.var_index()]) home[y.code()] = c;
    }
  }
  if (random_order != nullptr) random_order->shuffle(std::span<std::uint32_t>(neutral));

  KernelResult result;
  for (std::uint32_t v : neutral) {
    std::uint32_t a = home[2 * v];
    std::uint32_t b = home[2 * v + 1];
    pending[v] = 0;
    ++result.resolved_vars;
    if (a == b) {
      clauses[a].alive = false;
      ++result.dropped_degenerate;
      continue;
    }
    Slots merged;
    for (std::uint32_t c : {a, b}) {
      for (std::size_t s = 0; s < clauses[c].size; ++s) {
        Literal y = clauses[c].lit[s];
        if (y.var_index() == v) continue;
        merged.lit[merged.size++] = y;
      }
    }
    clauses[a] = merged;
    clauses[b].alive = false;
    for (std::size_t s = 0; s < merged.size; ++s) {
      Literal y = merged.lit[s];
      if (pending[y.var_index()]) home[y.code()] = a;
    }
    if (merged.size == 2 && merged.lit[0] == ~merged.lit[1] && !pending[merged.lit[0].var_index()]) {
      ++result.kept_tautologies;
    }
  }

  result.kernel = MultiFormula(core.num_vars(), core.arity());
  for (const auto& c : clauses) {
    if (c.alive) result.kernel.add_clause(std::span<const Literal>(c.lit.data(), c.size));
  }
  return result;
}

bool kernel_order_invariance_check(const MultiFormula& core, unsigned trials, Rng& rng) {
  if (trials == 0) return true;
  auto reference = kernel(core, &rng).kernel.canonical();
  for (unsigned t = 1; t < trials; ++t) {
    if (kernel(core, &rng).kernel.canonical() != reference) return false;
  }
  return true;
}

ReductionStats reduction_stats(const MultiFormula& f) {
  ReductionStats stats;
  stats.pla = pla_core(f);
  const auto& core = stats.pla.core;
  stats.core_census = census(core);
  stats.core_vars = stats.core_census.num_vars();
  stats.core_clauses = core.num_clauses();

  const auto& c = stats.core_census;
  if (core.num_slots() != c.M(1, 1)) {
    throw std::logic_error("core slot count differs from M(1,1)");
  }
  if (core.arity() > 2) return stats;  // resolution is only defined for 2-clauses

  stats.kernel = kernel(core);
  const auto& k = stats.kernel.kernel;
  stats.kernel_census = census(k);
  stats.kernel_vars = stats.kernel_census.num_vars();
  stats.kernel_clauses = k.num_clauses();
  if (k.num_slots() != c.M(1, 2) + c.M(2, 1) - c.M(2, 2)) {
    throw std::logic_error("kernel slot count differs from M(1,2) + M(2,1) - M(2,2)");
  }
  return stats;
}

}  // namespace satcore
