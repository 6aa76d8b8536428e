#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "satcore/confmodel.hpp"
#include "satcore/stats.hpp"

using namespace satcore;

namespace {

TypeCensus ones(std::uint64_t count) {
  TypeCensus c;
  c.add(1, 1, count);
  return c;
}

}  // namespace

TEST_CASE("single (1,1) variable") {
  Rng rng(1);
  auto inst = sample_configuration(ones(1), rng);
  REQUIRE(inst.formula.num_clauses() == 1);
  CHECK(inst.formula.clause(0)[0] == Literal::positive(1));
  CHECK(inst.formula.clause(0)[1] == Literal::negative(1));
  CHECK_FALSE(inst.simple);
  CHECK_THROWS_AS(sample_simple(ones(1), rng, 50), SimpleSamplingError);
}

TEST_CASE("empty census") {
  Rng rng(1);
  auto inst = sample_configuration(TypeCensus{}, rng);
  CHECK(inst.formula.empty());
  CHECK(inst.simple);
}

TEST_CASE("degrees are preserved") {
  Rng rng(2);
  TypeCensus c;
  c.add(1, 1, 30);
  c.add(2, 1, 8);
  c.add(1, 3, 4);
  c.add(3, 3, 2);
  for (int t = 0; t < 200; ++t) {
    auto inst = sample_configuration(c, rng);
    REQUIRE(census(inst.formula) == c);
    CHECK_FALSE(inst.defected);
  }
  TypeCensus odd;
  odd.add(2, 1, 1);
  auto inst = sample_configuration(odd, rng);
  CHECK(inst.defected);
  CHECK(census(inst.formula) == odd);
}

TEST_CASE("two (1,1) variables: exact simple probability and uniformity") {
  // Of the three matchings on x1, ~x1, x2, ~x2 only {x1~x1, x2~x2} is not simple.
  Rng rng(3);
  const std::uint64_t trials = 100000;
  auto est = estimate_sim_prob(ones(2), trials, rng);
  double p = 2.0 / 3.0;
  CHECK(std::abs(est.p - p) < 3.0 * std::sqrt(p * (1 - p) / trials));
  CHECK(est.lo < p);
  CHECK(est.hi > p);

  std::uint64_t same_sign = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto s = sample_simple(ones(2), rng, 100);
    CHECK(s.instance.simple);
    auto c0 = s.instance.formula.clause(0);
    same_sign += c0[0].is_positive() == c0[1].is_positive();
  }
  std::vector<std::uint64_t> observed{same_sign, trials - same_sign};
  std::vector<double> half{0.5, 0.5};
  CHECK(chi_square_sf(chi_square_statistic(observed, half), 1) > 1e-3);
}

TEST_CASE("one (2,2) variable is never simple") {
  TypeCensus c;
  c.add(2, 2, 1);
  Rng rng(4);
  CHECK(estimate_sim_prob(c, 2000, rng).successes == 0);
}

TEST_CASE("simple probability approaches e^{-1/2}") {
  const double limit = std::exp(-0.5);
  Rng rng(5);
  auto p10 = estimate_sim_prob(ones(10), 100000, rng);
  auto p100 = estimate_sim_prob(ones(100), 20000, rng);
  auto p10k = estimate_sim_prob(ones(10000), 5000, rng);
  MESSAGE("Pr[SIM] at 10, 100, 10^4 variables: " << p10.p << ", " << p100.p << ", " << p10k.p);
  CHECK(std::abs(p10.p - limit) > std::abs(p10k.p - limit));
  CHECK(std::abs(p100.p - limit) < 0.03);
  CHECK(std::abs(p10k.p - limit) < 0.025);

  // Expected tries are close to 1 / Pr[SIM].
  RunningStats tries;
  for (int t = 0; t < 2000; ++t) tries.add(double(sample_simple(ones(1000), rng, 1000).tries));
  CHECK(tries.mean() == doctest::Approx(std::exp(0.5)).epsilon(0.1));
  CHECK_THROWS(estimate_sim_prob(ones(3), 0, rng));
}
