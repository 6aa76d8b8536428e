#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satcore {

/// A literal packed as 2*(variable-1) + (negative ? 1 : 0).
///
/// Sorting by code orders literals by (variable index, polarity) with the
/// positive literal first, which is the canonical slot order of a clause.
class Literal {
 public:
  constexpr Literal() = default;

  static constexpr Literal positive(std::uint32_t var) { return Literal{2 * (var - 1)}; }
  static constexpr Literal negative(std::uint32_t var) { return Literal{2 * (var - 1) + 1}; }
  static constexpr Literal from_code(std::uint32_t code) { return Literal{code}; }
  /// DIMACS signed integer (never zero).
  static Literal from_dimacs(std::int64_t value);

  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t var() const { return code_ / 2 + 1; }
  constexpr std::uint32_t var_index() const { return code_ / 2; }
  constexpr bool is_positive() const { return (code_ & 1u) == 0; }
  constexpr Literal operator~() const { return Literal{code_ ^ 1u}; }
  std::int64_t to_dimacs() const;

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  constexpr explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// Owned clause in canonical (sorted) order.
using Clause = std::vector<Literal>;

/// Multiset of clauses over variables 1..n.
///
/// Clauses are stored contiguously; each clause is kept in canonical slot
/// order so that equality of formulas reduces to equality of sorted clause
/// lists. Loops (y or y), tautologies (y or ~y), duplicates and short
/// clauses are all representable.
class MultiFormula {
 public:
  explicit MultiFormula(std::uint32_t num_vars = 0, std::uint32_t arity = 2);

  std::uint32_t num_vars() const { return num_vars_; }
  /// Nominal clause width k of the model that produced the formula.
  std::uint32_t arity() const { return arity_; }
  std::size_t num_clauses() const { return offsets_.size() - 1; }
  std::size_t num_slots() const { return literals_.size(); }
  bool empty() const { return num_clauses() == 0; }

  std::span<const Literal> clause(std::size_t i) const {
    return {literals_.data() + offsets_[i], literals_.data() + offsets_[i + 1]};
  }

  void add_clause(std::span<const Literal> lits);
  void add_clause(std::initializer_list<Literal> lits) {
    add_clause(std::span<const Literal>(lits.begin(), lits.size()));
  }
  void reserve(std::size_t clauses, std::size_t slots);

  /// Clause list sorted lexicographically; the canonical multiset form.
  std::vector<Clause> canonical() const;

  friend bool operator==(const MultiFormula& a, const MultiFormula& b);

 private:
  std::uint32_t num_vars_;
  std::uint32_t arity_;
  std::vector<Literal> literals_;
  std::vector<std::uint32_t> offsets_;
};

/// d(y) per literal code: the number of clause slots holding y.
struct LiteralDegrees {
  std::vector<std::uint32_t> d;

  std::uint32_t operator[](Literal y) const { return d[y.code()]; }
  std::uint64_t total() const;
};

LiteralDegrees degrees(const MultiFormula& f);

using VarType = std::pair<std::uint32_t, std::uint32_t>;

/// Count of variables by type (d(x), d(~x)); isolated variables excluded.
class TypeCensus {
 public:
  TypeCensus() = default;
  explicit TypeCensus(std::map<VarType, std::uint64_t> counts);

  void add(std::uint32_t i, std::uint32_t j, std::uint64_t count = 1);
  std::uint64_t count(std::uint32_t i, std::uint32_t j) const;
  const std::map<VarType, std::uint64_t>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  std::uint64_t num_vars() const;
  std::uint64_t num_slots() const;

  /// Variables whose type dominates (i, j) componentwise.
  std::uint64_t D(std::uint32_t i, std::uint32_t j) const;
  /// Degree sum over the variables counted by D(i, j), both polarities.
  std::uint64_t M(std::uint32_t i, std::uint32_t j) const;

  friend bool operator==(const TypeCensus&, const TypeCensus&) = default;

 private:
  std::map<VarType, std::uint64_t> counts_;
};

TypeCensus census(const MultiFormula& f);
inline std::uint64_t census_D(const TypeCensus& c, std::uint32_t i, std::uint32_t j) { return c.D(i, j); }
inline std::uint64_t census_M(const TypeCensus& c, std::uint32_t i, std::uint32_t j) { return c.M(i, j); }

/// No clause touches one variable twice and no two clauses are equal.
bool is_simple(const MultiFormula& f);

/// Simple and every clause has the nominal arity (no defected clause).
bool is_standard(const MultiFormula& f);

/// Number of variables that occur in at least one clause.
std::uint64_t num_occurring_vars(const MultiFormula& f);

// DIMACS ------------------------------------------------------------------

class DimacsError : public std::runtime_error {
 public:
  enum class Kind { MalformedHeader, IndexOutOfRange, MissingTerminator, BadToken, ClauseCount };
  DimacsError(Kind kind, std::size_t line, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Reads `p cnf n m` followed by zero-terminated clauses. Repeated variables
/// and duplicate clauses are kept; a bare `0` is an empty clause.
MultiFormula read_dimacs(std::istream& in, std::uint32_t arity = 2);
MultiFormula parse_dimacs(const std::string& text, std::uint32_t arity = 2);
void write_dimacs(const MultiFormula& f, std::ostream& out);
std::string to_dimacs(const MultiFormula& f);

}  // namespace satcore
