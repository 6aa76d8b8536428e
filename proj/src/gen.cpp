#include "satcore/gen.hpp"

#include <stdexcept>
#include <unordered_set>

namespace satcore {

namespace {

constexpr unsigned __int128 kSaturated = static_cast<unsigned __int128>(1) << 100;

// C(c, t) computed exactly, saturating at 2^100.
unsigned __int128 binom(std::uint64_t c, std::uint32_t t) {
  if (t > c) return 0;
  unsigned __int128 result = 1;
  for (std::uint32_t i = 1; i <= t; ++i) {
    result = result * (c - t + i) / i;
    if (result >= kSaturated) return kSaturated;
  }
  return result;
}

}  // namespace

std::uint64_t clause_universe_size(std::uint32_t n, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("clause width must be positive");
  if (k > 62) throw std::overflow_error("clause width too large");
  unsigned __int128 subsets = binom(n, k);
  unsigned __int128 total = subsets << k;
  if (total >= (static_cast<unsigned __int128>(1) << 63)) {
    throw std::overflow_error("clause universe 2^k C(n,k) does not fit in 63 bits");
  }
  return static_cast<std::uint64_t>(total);
}

Clause unrank_clause(std::uint64_t rank, std::uint32_t n, std::uint32_t k) {
  std::uint64_t polarity = rank & ((std::uint64_t{1} << k) - 1);
  std::uint64_t r = rank >> k;
  Clause clause(k);
  std::uint64_t upper = n;  // exclusive bound on the next variable index
  for (std::uint32_t t = k; t >= 1; --t) {
    // Largest c < upper with C(c, t) <= r.
    std::uint64_t lo = t - 1;
    std::uint64_t hi = upper - 1;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (binom(mid, t) <= r) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    r -= static_cast<std::uint64_t>(binom(lo, t));
    auto var = static_cast<std::uint32_t>(lo + 1);
    bool negative = (polarity >> (t - 1)) & 1u;
    clause[t - 1] = negative ? Literal::negative(var) : Literal::positive(var);
    upper = lo;
  }
  return clause;
}

std::uint64_t rank_clause(std::span<const Literal> clause, std::uint32_t n) {
  auto k = static_cast<std::uint32_t>(clause.size());
  std::uint64_t subset = 0;
  std::uint64_t polarity = 0;
  for (std::uint32_t t = 1; t <= k; ++t) {
    Literal y = clause[t - 1];
    if (y.var() > n) throw std::out_of_range("literal outside 1..n");
    if (t > 1 && clause[t - 2].var() >= y.var()) {
      throw std::invalid_argument("rank_clause needs canonical order over distinct variables");
    }
    subset += static_cast<std::uint64_t>(binom(y.var_index(), t));
    if (!y.is_positive()) polarity |= std::uint64_t{1} << (t - 1);
  }
  return (subset << k) | polarity;
}

MultiFormula sample_classical(std::uint32_t n, double p, std::uint32_t k, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  MultiFormula f(n, k);
  if (k > n) return f;
  std::uint64_t universe = clause_universe_size(n, k);
  std::uint64_t m = sample_binomial(universe, p, rng);
  f.reserve(m, m * k);

  // Floyd's algorithm: m distinct ranks, each subset equally likely.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  for (std::uint64_t j = universe - m; j < universe; ++j) {
    std::uint64_t t = rng.below(j + 1);
    std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    f.add_clause(unrank_clause(pick, n, k));
  }
  return f;
}

MultiFormula sample_poisson_cloning(std::uint32_t n, double lambda, std::uint32_t k, Rng& rng) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  MultiFormula f(n, k);
  if (n == 0) return f;
  std::uint64_t clones = sample_poisson(2.0 * lambda * n, rng);
  std::uint64_t literals = 2 * static_cast<std::uint64_t>(n);
  f.reserve(clones / k + 1, clones);
  // Labels are i.i.d. uniform, so grouping consecutive clones has the same
  // law as a uniform partition of the clones into k-sets.
  std::vector<Literal> buf(k);
  std::uint64_t full = clones / k;
  for (std::uint64_t c = 0; c < full; ++c) {
    for (auto& y : buf) y = Literal::from_code(static_cast<std::uint32_t>(rng.below(literals)));
    f.add_clause(buf);
  }
  if (auto rest = clones % k; rest != 0) {
    buf.resize(rest);
    for (auto& y : buf) y = Literal::from_code(static_cast<std::uint32_t>(rng.below(literals)));
    f.add_clause(buf);
  }
  return f;
}

LambdaCell build_lambda_cell(std::uint32_t n, double lambda, Rng& rng) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  LambdaCell cell{n, lambda, {}};
  cell.clones.reserve(static_cast<std::size_t>(2.0 * lambda * n * 1.05) + 16);
  std::poisson_distribution<std::uint32_t> degree(lambda);
  for (std::uint32_t code = 0; code < 2 * n; ++code) {
    std::uint32_t d = degree(rng);
    for (std::uint32_t i = 0; i < d; ++i) {
      cell.clones.push_back({Literal::from_code(code), rng.uniform01() * lambda});
    }
  }
  return cell;
}

}  // namespace satcore
