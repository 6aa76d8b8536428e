#include "satcore/sat.hpp"

#include <limits>
#include <stdexcept>

namespace satcore {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Tarjan's algorithm with an explicit call stack. Components are numbered in
// reverse topological order of the condensation.
std::vector<std::uint32_t> strongly_connected(std::uint32_t nodes, const std::vector<std::uint32_t>& first,
                                              const std::vector<std::uint32_t>& target) {
  std::vector<std::uint32_t> index(nodes, kUnvisited);
  std::vector<std::uint32_t> low(nodes, 0);
  std::vector<std::uint32_t> component(nodes, kUnvisited);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> calls;  // (node, next edge)
  std::uint32_t counter = 0;
  std::uint32_t components = 0;

  for (std::uint32_t root = 0; root < nodes; ++root) {
    if (index[root] != kUnvisited) continue;
    calls.push_back({root, first[root]});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!calls.empty()) {
      auto& [u, edge] = calls.back();
      if (edge < first[u + 1]) {
        std::uint32_t w = target[edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          calls.push_back({w, first[w]});
        } else if (component[w] == kUnvisited) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      std::uint32_t done = u;
      calls.pop_back();
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          component[w] = components;
        } while (w != done);
        ++components;
      }
      if (!calls.empty()) {
        std::uint32_t parent = calls.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return component;
}

}  // namespace

SatVerdict decide_2sat(const MultiFormula& f) {
  const std::uint32_t nodes = 2 * f.num_vars();
  std::vector<std::uint32_t> first(nodes + 1, 0);
  auto for_each_edge = [&f](auto&& emit) {
    for (std::size_t c = 0; c < f.num_clauses(); ++c) {
      auto lits = f.clause(c);
      if (lits.size() == 1) {
        emit(~lits[0], lits[0]);
      } else if (lits.size() == 2) {
        if (lits[0] == ~lits[1]) continue;  // tautology
        emit(~lits[0], lits[1]);
        emit(~lits[1], lits[0]);
      }
    }
  };
  for (std::size_t c = 0; c < f.num_clauses(); ++c) {
    auto size = f.clause(c).size();
    if (size == 0) return {false, std::nullopt};
    if (size > 2) throw std::invalid_argument("decide_2sat: clause wider than 2");
  }
  for_each_edge([&](Literal from, Literal) { ++first[from.code() + 1]; });
  for (std::uint32_t u = 0; u < nodes; ++u) first[u + 1] += first[u];
  std::vector<std::uint32_t> target(first.back());
  {
    std::vector<std::uint32_t> fill(first.begin(), first.end() - 1);
    for_each_edge([&](Literal from, Literal to) { target[fill[from.code()]++] = to.code(); });
  }

  auto component = strongly_connected(nodes, first, target);
  Assignment assignment(f.num_vars(), false);
  for (std::uint32_t v = 0; v < f.num_vars(); ++v) {
    auto pos = component[2 * v];
    auto neg = component[2 * v + 1];
    if (pos == neg) return {false, std::nullopt};
    // Lower component number = closer to the sinks of the implication order.
    assignment[v] = pos < neg;
  }
  return {true, std::move(assignment)};
}

SatVerdict brute_force(const MultiFormula& f) {
  const std::uint32_t n = f.num_vars();
  if (n > 24) throw std::invalid_argument("brute_force supports at most 24 variables");
  // Bit (n - var) of the mask holds the value of var, so counting upwards
  // walks assignments in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> clause_masks;  // (positive bits, negative bits)
  clause_masks.reserve(f.num_clauses());
  for (std::size_t c = 0; c < f.num_clauses(); ++c) {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (Literal y : f.clause(c)) {
      std::uint32_t bit = 1u << (n - y.var());
      (y.is_positive() ? pos : neg) |= bit;
    }
    clause_masks.push_back({pos, neg});
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    auto bits = static_cast<std::uint32_t>(mask);
    bool ok = true;
    for (auto [pos, neg] : clause_masks) {
      if ((bits & pos) == 0 && (~bits & neg) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment assignment(n);
      for (std::uint32_t v = 1; v <= n; ++v) assignment[v - 1] = (bits >> (n - v)) & 1u;
      return {true, std::move(assignment)};
    }
  }
  return {false, std::nullopt};
}

bool verify_assignment(const MultiFormula& f, const Assignment& assignment) {
  for (std::size_t c = 0; c < f.num_clauses(); ++c) {
    bool satisfied = false;
    for (Literal y : f.clause(c)) {
      if (y.var() > assignment.size()) {
        throw std::invalid_argument("assignment misses variable " + std::to_string(y.var()));
      }
      if (assignment[y.var_index()] == y.is_positive()) satisfied = true;
    }
    if (!satisfied) return false;
  }
  return true;
}

}  // namespace satcore
