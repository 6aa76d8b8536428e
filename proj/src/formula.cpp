#include "satcore/formula.hpp"

#include <algorithm>
#include <numeric>

namespace satcore {

Literal Literal::from_dimacs(std::int64_t value) {
  if (value == 0) throw std::invalid_argument("literal 0 is a clause terminator");
  auto var = static_cast<std::uint32_t>(value > 0 ? value : -value);
  return value > 0 ? positive(var) : negative(var);
}

std::int64_t Literal::to_dimacs() const {
  auto v = static_cast<std::int64_t>(var());
  return is_positive() ? v : -v;
}

MultiFormula::MultiFormula(std::uint32_t num_vars, std::uint32_t arity)
    : num_vars_(num_vars), arity_(arity), offsets_{0} {}

void MultiFormula::reserve(std::size_t clauses, std::size_t slots) {
  offsets_.reserve(clauses + 1);
  literals_.reserve(slots);
}

void MultiFormula::add_clause(std::span<const Literal> lits) {
  for (Literal y : lits) {
    if (y.var() > num_vars_) {
      throw std::out_of_range("literal on variable " + std::to_string(y.var()) +
                              " exceeds n = " + std::to_string(num_vars_));
    }
  }
  auto begin = literals_.size();
  literals_.insert(literals_.end(), lits.begin(), lits.end());
  std::sort(literals_.begin() + static_cast<std::ptrdiff_t>(begin), literals_.end());
  offsets_.push_back(static_cast<std::uint32_t>(literals_.size()));
}

std::vector<Clause> MultiFormula::canonical() const {
  std::vector<Clause> out;
  out.reserve(num_clauses());
  for (std::size_t i = 0; i < num_clauses(); ++i) {
    auto c = clause(i);
    out.emplace_back(c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const MultiFormula& a, const MultiFormula& b) {
  if (a.num_vars_ != b.num_vars_ || a.num_clauses() != b.num_clauses() ||
      a.num_slots() != b.num_slots()) {
    return false;
  }
  return a.canonical() == b.canonical();
}

std::uint64_t LiteralDegrees::total() const {
  return std::accumulate(d.begin(), d.end(), std::uint64_t{0});
}

LiteralDegrees degrees(const MultiFormula& f) {
  LiteralDegrees deg;
  deg.d.assign(2 * static_cast<std::size_t>(f.num_vars()), 0);
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    for (Literal y : f.clause(i)) ++deg.d[y.code()];
  }
  return deg;
}

TypeCensus::TypeCensus(std::map<VarType, std::uint64_t> counts) {
  for (auto [type, count] : counts) add(type.first, type.second, count);
}

void TypeCensus::add(std::uint32_t i, std::uint32_t j, std::uint64_t count) {
  if (i == 0 && j == 0) throw std::invalid_argument("type (0,0) is not part of a census");
  if (count == 0) return;
  counts_[{i, j}] += count;
}

std::uint64_t TypeCensus::count(std::uint32_t i, std::uint32_t j) const {
  auto it = counts_.find({i, j});
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t TypeCensus::num_vars() const {
  std::uint64_t total = 0;
  for (const auto& [type, count] : counts_) total += count;
  return total;
}

std::uint64_t TypeCensus::num_slots() const {
  std::uint64_t total = 0;
  for (const auto& [type, count] : counts_) total += count * (type.first + type.second);
  return total;
}

std::uint64_t TypeCensus::D(std::uint32_t i, std::uint32_t j) const {
  std::uint64_t total = 0;
  for (const auto& [type, count] : counts_) {
    if (type.first >= i && type.second >= j) total += count;
  }
  return total;
}

std::uint64_t TypeCensus::M(std::uint32_t i, std::uint32_t j) const {
  std::uint64_t total = 0;
  for (const auto& [type, count] : counts_) {
    if (type.first >= i && type.second >= j) total += count * (type.first + type.second);
  }
  return total;
}

TypeCensus census(const MultiFormula& f) {
  auto deg = degrees(f);
  TypeCensus c;
  for (std::uint32_t v = 1; v <= f.num_vars(); ++v) {
    auto i = deg[Literal::positive(v)];
    auto j = deg[Literal::negative(v)];
    if (i != 0 || j != 0) c.add(i, j);
  }
  return c;
}

bool is_simple(const MultiFormula& f) {
  std::vector<std::uint64_t> keys;
  keys.reserve(f.num_clauses());
  bool packable = true;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    auto c = f.clause(i);
    for (std::size_t s = 1; s < c.size(); ++s) {
      // Canonical order puts both slots of a variable next to each other.
      if (c[s].var() == c[s - 1].var()) return false;
    }
    if (c.size() > 2) packable = false;
    if (packable) {
      std::uint64_t key = c.empty() ? 0 : (std::uint64_t{c[0].code()} + 1);
      key <<= 32;
      if (c.size() == 2) key |= std::uint64_t{c[1].code()} + 1;
      keys.push_back(key);
    }
  }
  if (!packable) {
    auto clauses = f.canonical();
    return std::adjacent_find(clauses.begin(), clauses.end()) == clauses.end();
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool is_standard(const MultiFormula& f) {
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    if (f.clause(i).size() != f.arity()) return false;
  }
  return is_simple(f);
}

std::uint64_t num_occurring_vars(const MultiFormula& f) {
  std::vector<bool> seen(f.num_vars() + 1, false);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    for (Literal y : f.clause(i)) {
      if (!seen[y.var()]) {
        seen[y.var()] = true;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace satcore
