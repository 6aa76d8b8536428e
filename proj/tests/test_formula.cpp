#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include "satcore/formula.hpp"
#include "satcore/gen.hpp"

using namespace satcore;

namespace {

Literal P(std::uint32_t v) { return Literal::positive(v); }
Literal N(std::uint32_t v) { return Literal::negative(v); }

MultiFormula chain3() {
  MultiFormula f(3);
  f.add_clause({P(1), P(2)});
  f.add_clause({N(1), P(2)});
  f.add_clause({N(2), P(3)});
  return f;
}

}  // namespace

TEST_CASE("literal encoding") {
  CHECK(P(1).code() == 0);
  CHECK(N(1).code() == 1);
  CHECK(N(3).var() == 3);
  CHECK(~~P(4) == P(4));
  CHECK(~P(4) == N(4));
  CHECK(Literal::from_dimacs(-7) == N(7));
  CHECK(N(7).to_dimacs() == -7);
  CHECK_THROWS(Literal::from_dimacs(0));
}

TEST_CASE("clauses are stored in canonical order") {
  MultiFormula a(2);
  a.add_clause({N(2), P(1)});
  MultiFormula b(2);
  b.add_clause({P(1), N(2)});
  CHECK(a == b);
  CHECK(a.clause(0)[0] == P(1));
  MultiFormula c(1);
  CHECK_THROWS_AS(c.add_clause({P(2)}), std::out_of_range);
}

TEST_CASE("degrees") {
  MultiFormula empty(3);
  auto d0 = degrees(empty);
  for (auto v : d0.d) CHECK(v == 0);

  MultiFormula loop(1);
  loop.add_clause({P(1), P(1)});
  auto dl = degrees(loop);
  CHECK(dl[P(1)] == 2);
  CHECK(dl[N(1)] == 0);

  auto d = degrees(chain3());
  CHECK(d[P(1)] == 1);
  CHECK(d[N(1)] == 1);
  CHECK(d[P(2)] == 2);
  CHECK(d[N(2)] == 1);
  CHECK(d[P(3)] == 1);
  CHECK(d[N(3)] == 0);
  CHECK(d.total() == chain3().num_slots());
}

TEST_CASE("type census and D/M statistics") {
  CHECK(census(MultiFormula(4)).empty());

  MultiFormula f(2);
  f.add_clause({P(1), P(2)});
  f.add_clause({N(1), N(2)});
  auto c = census(f);
  CHECK(c.count(1, 1) == 2);
  CHECK(c.num_vars() == 2);
  CHECK(census_D(c, 1, 1) == 2);
  CHECK(census_M(c, 1, 1) == 4);

  auto c3 = census(chain3());
  CHECK(c3.count(1, 1) == 1);
  CHECK(c3.count(2, 1) == 1);
  CHECK(c3.count(1, 0) == 1);
  CHECK(c3.counts().size() == 3);
  CHECK(census_D(c3, 1, 1) == 2);
  CHECK(census_D(c3, 2, 1) == 1);

  TypeCensus m;
  m.add(1, 1);
  m.add(2, 1);
  CHECK(census_M(m, 1, 1) == 5);
  CHECK(census_M(m, 2, 2) == 0);
  CHECK_THROWS(m.add(0, 0));
}

TEST_CASE("census slot identity on random formulas") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    auto f = sample_poisson_cloning(40, 1.3, 2, rng);
    CHECK(census(f).num_slots() == f.num_slots());
    CHECK(census(f).num_vars() == num_occurring_vars(f));
  }
}

TEST_CASE("simplicity") {
  MultiFormula a(2);
  a.add_clause({P(1), P(2)});
  a.add_clause({N(1), N(2)});
  CHECK(is_simple(a));
  CHECK(is_standard(a));

  MultiFormula taut(1);
  taut.add_clause({P(1), N(1)});
  CHECK_FALSE(is_simple(taut));

  MultiFormula loop(1);
  loop.add_clause({N(1), N(1)});
  CHECK_FALSE(is_simple(loop));

  MultiFormula dup(2);
  dup.add_clause({P(1), P(2)});
  dup.add_clause({P(2), P(1)});
  CHECK_FALSE(is_simple(dup));

  MultiFormula unit(2);
  unit.add_clause({P(1), P(2)});
  unit.add_clause({N(2)});
  CHECK(is_simple(unit));
  CHECK_FALSE(is_standard(unit));
}

TEST_CASE("classical samples are simple") {
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    auto f = sample_classical(30, 1.4 / 59.0, 2, rng);
    REQUIRE(is_simple(f));
  }
}

TEST_CASE("DIMACS parsing") {
  auto f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  MultiFormula want(2);
  want.add_clause({P(1), N(2)});
  CHECK(f == want);

  auto loop = parse_dimacs("c a comment\np cnf 1 1\n1 1 0\n");
  REQUIRE(loop.num_clauses() == 1);
  CHECK(loop.clause(0).size() == 2);
  CHECK(loop.clause(0)[0] == P(1));
  CHECK(loop.clause(0)[1] == P(1));

  auto unit = parse_dimacs("p cnf 3 2\n1 2 0\n-3 0\n");
  CHECK(unit.clause(1).size() == 1);

  auto kind = [](const std::string& text) {
    try {
      parse_dimacs(text);
    } catch (const DimacsError& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return DimacsError::Kind::BadToken;
  };
  CHECK(kind("p dnf 2 1\n1 2 0\n") == DimacsError::Kind::MalformedHeader);
  CHECK(kind("1 2 0\n") == DimacsError::Kind::MalformedHeader);
  CHECK(kind("p cnf 2 1\n1 3 0\n") == DimacsError::Kind::IndexOutOfRange);
  CHECK(kind("p cnf 2 1\n1 2\n") == DimacsError::Kind::MissingTerminator);
  CHECK(kind("p cnf 2 1\n1 x 0\n") == DimacsError::Kind::BadToken);
  CHECK(kind("p cnf 2 2\n1 2 0\n") == DimacsError::Kind::ClauseCount);
}

TEST_CASE("DIMACS round trip with loops, duplicates and a unit") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto f = sample_poisson_cloning(6, 1.0 + 0.01 * t, 2, rng);
    std::stringstream s;
    write_dimacs(f, s);
    auto g = read_dimacs(s);
    REQUIRE(f == g);
  }
}
