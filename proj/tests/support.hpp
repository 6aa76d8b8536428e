#pragma once

#include <functional>
#include <vector>

#include "satcore/formula.hpp"
#include "satcore/rng.hpp"

namespace satcore::testing {

/// Every clause of width 1 or 2 over n variables, loops and tautologies included.
inline std::vector<Clause> all_small_clauses(std::uint32_t n) {
  std::vector<Clause> out;
  for (std::uint32_t a = 0; a < 2 * n; ++a) {
    out.push_back({Literal::from_code(a)});
    for (std::uint32_t b = a; b < 2 * n; ++b) out.push_back({Literal::from_code(a), Literal::from_code(b)});
  }
  return out;
}

/// Calls visit on every multiset of at most max_size clauses from `pool`.
inline void for_each_multiset(const std::vector<Clause>& pool, std::uint32_t n, std::size_t max_size,
                              const std::function<void(const MultiFormula&)>& visit) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    MultiFormula f(n);
    for (auto i : pick) f.add_clause(pool[i]);
    visit(f);
    if (pick.size() == max_size) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
}

/// Small random formula over at most 10 variables mixing 2-clauses, loops,
/// tautologies, duplicates and unit clauses.
inline MultiFormula random_small_formula(Rng& rng) {
  auto n = static_cast<std::uint32_t>(1 + rng.below(10));
  auto m = rng.below(3 * n + 2);
  MultiFormula f(n);
  for (std::uint64_t c = 0; c < m; ++c) {
    auto a = Literal::from_code(static_cast<std::uint32_t>(rng.below(2 * n)));
    auto roll = rng.below(20);
    if (roll == 0) {
      f.add_clause({a});
    } else if (roll == 1) {
      f.add_clause({a, a});
    } else if (roll == 2 && f.num_clauses() > 0) {
      auto prev = f.clause(rng.below(f.num_clauses()));
      Clause copy(prev.begin(), prev.end());
      f.add_clause(copy);
    } else {
      f.add_clause({a, Literal::from_code(static_cast<std::uint32_t>(rng.below(2 * n)))});
    }
  }
  return f;
}

}  // namespace satcore::testing
