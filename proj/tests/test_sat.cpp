#include <doctest.h>

#include <chrono>
#include <initializer_list>
#include <stdexcept>

#include "satcore/gen.hpp"
#include "satcore/sat.hpp"
#include "support.hpp"

using namespace satcore;

namespace {

Literal P(std::uint32_t v) { return Literal::positive(v); }
Literal N(std::uint32_t v) { return Literal::negative(v); }

}  // namespace

TEST_CASE("decide_2sat examples") {
  auto empty = decide_2sat(MultiFormula(0));
  CHECK(empty.satisfiable);
  CHECK(empty.assignment->empty());

  MultiFormula loops(1);
  loops.add_clause({P(1), P(1)});
  loops.add_clause({N(1), N(1)});
  CHECK_FALSE(decide_2sat(loops).satisfiable);

  MultiFormula wide(3, 3);
  wide.add_clause({P(1), P(2), P(3)});
  CHECK_THROWS_AS(decide_2sat(wide), std::invalid_argument);

  MultiFormula with_empty(1);
  with_empty.add_clause(std::span<const Literal>{});
  CHECK_FALSE(decide_2sat(with_empty).satisfiable);
}

TEST_CASE("brute force examples") {
  MultiFormula f(2);
  f.add_clause({P(1), P(2)});
  auto v = brute_force(f);
  REQUIRE(v.satisfiable);
  CHECK(*v.assignment == Assignment{false, true});

  MultiFormula t(1);
  t.add_clause({P(1), N(1)});
  CHECK(brute_force(t).satisfiable);
  CHECK_THROWS(brute_force(MultiFormula(25)));
}

TEST_CASE("verify_assignment") {
  CHECK(verify_assignment(MultiFormula(2), Assignment{true, true}));
  MultiFormula f(2);
  f.add_clause({P(1), P(2)});
  CHECK_FALSE(verify_assignment(f, Assignment{false, false}));
  CHECK_THROWS(verify_assignment(f, Assignment{true}));
}

TEST_CASE("exhaustive agreement on two variables") {
  auto pool = testing::all_small_clauses(2);
  std::size_t checked = 0;
  testing::for_each_multiset(pool, 2, 4, [&](const MultiFormula& f) {
    auto fast = decide_2sat(f);
    REQUIRE(fast.satisfiable == brute_force(f).satisfiable);
    if (fast.satisfiable) REQUIRE(verify_assignment(f, *fast.assignment));
    ++checked;
  });
  CHECK(checked == 3060);  // multisets of size <= 4 from 14 clause kinds
}

TEST_CASE("random agreement with the truth-table oracle") {
  Rng rng(99);
  for (int t = 0; t < 10000; ++t) {
    auto f = testing::random_small_formula(rng);
    auto fast = decide_2sat(f);
    REQUIRE(fast.satisfiable == brute_force(f).satisfiable);
    if (fast.satisfiable) REQUIRE(verify_assignment(f, *fast.assignment));
  }
}

TEST_CASE("linear-time decision at n = 10^6") {
  Rng rng(1);
  auto f = sample_poisson_cloning(1000000, 0.5, 2, rng);
  auto start = std::chrono::steady_clock::now();
  auto v = decide_2sat(f);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(v.satisfiable);
  CHECK(verify_assignment(f, *v.assignment));
  MESSAGE("decide_2sat on 10^6 variables took " << seconds << " s");
  CHECK(seconds < 5.0);
}
