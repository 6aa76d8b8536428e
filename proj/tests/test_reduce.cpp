#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

#include "satcore/gen.hpp"
#include "satcore/reduce.hpp"
#include "satcore/sat.hpp"

using namespace satcore;

namespace {

Literal P(std::uint32_t v) { return Literal::positive(v); }
Literal N(std::uint32_t v) { return Literal::negative(v); }

MultiFormula make(std::uint32_t n, std::initializer_list<std::initializer_list<Literal>> clauses) {
  MultiFormula f(n);
  for (auto c : clauses) f.add_clause(c);
  return f;
}

bool type_floor_holds(const MultiFormula& k) {
  auto c = census(k);
  for (const auto& [type, count] : c.counts()) {
    if (!((type.first >= 2 && type.second >= 1) || (type.first >= 1 && type.second >= 2))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pure literal algorithm examples") {
  auto a = pla_core(make(2, {{P(1), P(2)}, {N(1), P(2)}}));
  CHECK(a.core.empty());
  CHECK(std::find(a.satisfied_literals.begin(), a.satisfied_literals.end(), P(2)) != a.satisfied_literals.end());

  auto b = make(2, {{P(1), P(2)}, {N(1), N(2)}});
  CHECK(pla_core(b).core == b);
  CHECK_FALSE(pla_succeeds(b));

  // x1 is pure and removes the first and third clause; then ~x2 is pure.
  auto c = pla_core(make(3, {{P(1), P(2)}, {N(2), P(3)}, {N(3), P(1)}}));
  CHECK(c.core.empty());
  CHECK(c.removed_clauses == 3);
  CHECK(pla_succeeds(MultiFormula(5)));

  // A unit clause counts once toward its literal's degree, so nothing here is
  // pure even though the formula is satisfiable.
  auto d_in = make(2, {{P(1)}, {N(1), P(2)}, {N(2), P(1)}});
  auto d = pla_core(d_in);
  CHECK(d.core == d_in);
  CHECK(degrees(d_in)[P(1)] == 2);
}

TEST_CASE("PLA invariants and confluence") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    auto f = sample_poisson_cloning(300, 1.0 + 0.01 * t, 2, rng);
    auto base = pla_core(f);
    CHECK_FALSE(has_pure_literal(base.core));
    auto c = census(base.core);
    CHECK(c.D(1, 1) == c.num_vars());
    std::vector<std::uint8_t> set(2 * f.num_vars(), 0);
    for (auto y : base.satisfied_literals) set[y.code()] = 1;
    for (auto y : base.satisfied_literals) CHECK_FALSE(set[(~y).code()]);
    for (int r = 0; r < 3; ++r) {
      auto other = pla_core(f, &rng);
      REQUIRE(other.core.canonical() == base.core.canonical());
    }
  }
}

TEST_CASE("k = 3 PLA") {
  Rng rng(22);
  auto f = sample_classical(200, 0.5 * 6.0 / (2.0 * 200 * 400), 3, rng);
  auto r = pla_core(f);
  CHECK_FALSE(has_pure_literal(r.core));
  CHECK(pla_core(f, &rng).core.canonical() == r.core.canonical());
}

TEST_CASE("kernel examples") {
  auto a = kernel(make(2, {{P(1), P(2)}, {N(1), N(2)}}));
  CHECK(a.kernel.empty());
  CHECK(a.resolved_vars == 2);
  CHECK(a.dropped_degenerate == 1);

  auto cycle = kernel(make(3, {{N(1), P(2)}, {N(2), P(3)}, {N(3), P(1)}}));
  CHECK(cycle.kernel.empty());
  CHECK(cycle.resolved_vars == 3);
  CHECK(cycle.dropped_degenerate == 1);

  auto heavy = make(2, {{P(1), P(2)}, {P(1), N(2)}, {N(1), P(2)}, {N(1), N(2)}, {P(1), P(2)}, {N(1), N(2)}});
  CHECK(kernel(heavy).kernel == heavy);

  auto unit = kernel(make(1, {{P(1)}, {N(1)}}));
  REQUIRE(unit.kernel.num_clauses() == 1);
  CHECK(unit.kernel.clause(0).empty());

  CHECK_THROWS_AS(kernel(make(2, {{P(1), P(2)}})), std::invalid_argument);
}

TEST_CASE("chain core: resolution order does not matter") {
  // x1 has type (2,2); x2, x3, x4 and x5 are (1,1) variables on two chains.
  auto core = make(5, {{P(1), P(2)}, {N(2), P(3)}, {N(3), P(4)}, {N(4), P(1)}, {N(1), P(5)}, {N(5), N(1)}});
  auto expected = make(5, {{P(1), P(1)}, {N(1), N(1)}});
  auto k = kernel(core);
  CHECK(k.kernel == expected);
  CHECK(k.resolved_vars == 4);
  Rng rng(3);
  CHECK(kernel_order_invariance_check(core, 200, rng));
  CHECK(kernel_order_invariance_check(core, 1, rng));
  CHECK_FALSE(decide_2sat(core).satisfiable);
  CHECK_FALSE(decide_2sat(k.kernel).satisfiable);
}

TEST_CASE("kernel of a (1,1) variable next to a heavy one keeps the tautology") {
  // x2 has type (2,2); resolving x1 yields (x2 or ~x2) and x2 keeps two more
  // occurrences, so dropping the clause would break the type floor.
  auto core = make(2, {{P(1), P(2)}, {N(1), N(2)}, {P(2), N(2)}});
  auto k = kernel(core);
  CHECK(k.kept_tautologies == 1);
  CHECK(type_floor_holds(k.kernel));
  CHECK(k.kernel.num_clauses() == 2);
}

TEST_CASE("random cores: confluence, type floor, equisatisfiability") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    auto f = sample_poisson_cloning(500, 1.5, 2, rng);
    auto stats = reduction_stats(f);
    const auto& k = stats.kernel.kernel;
    CHECK(type_floor_holds(k));
    CHECK(kernel_order_invariance_check(stats.pla.core, 10, rng));
    auto core_vars = census(stats.pla.core);
    for (const auto& [type, count] : stats.kernel_census.counts()) CHECK(type.first + type.second >= 3);
    CHECK(stats.kernel_vars <= stats.core_vars);
    CHECK(core_vars.D(2, 1) + core_vars.D(1, 2) - core_vars.D(2, 2) == stats.kernel_vars);
  }
  for (int t = 0; t < 2000; ++t) {
    auto n = static_cast<std::uint32_t>(20 + rng.below(180));
    auto f = sample_poisson_cloning(n, 0.7 + 0.001 * double(rng.below(800)), 2, rng);
    auto stats = reduction_stats(f);
    bool s = decide_2sat(f).satisfiable;
    REQUIRE(s == decide_2sat(stats.pla.core).satisfiable);
    REQUIRE(s == decide_2sat(stats.kernel.kernel).satisfiable);
    if (stats.pla.core.empty()) CHECK(s);
  }
}

TEST_CASE("reduction identities") {
  auto empty = reduction_stats(MultiFormula(3));
  CHECK(empty.core_vars == 0);
  CHECK(empty.kernel_clauses == 0);

  auto s = reduction_stats(make(2, {{P(1), P(2)}, {N(1), N(2)}}));
  CHECK(s.core_clauses == 2);
  CHECK(s.core_census.M(1, 1) == 4);
  CHECK(s.kernel_clauses == 0);
}
