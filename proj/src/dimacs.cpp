#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "satcore/formula.hpp"

namespace satcore {

namespace {

std::string kind_prefix(DimacsError::Kind kind) {
  switch (kind) {
    case DimacsError::Kind::MalformedHeader: return "malformed header";
    case DimacsError::Kind::IndexOutOfRange: return "variable index out of range";
    case DimacsError::Kind::MissingTerminator: return "missing clause terminator";
    case DimacsError::Kind::BadToken: return "bad token";
    case DimacsError::Kind::ClauseCount: return "clause count mismatch";
  }
  return "dimacs error";
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view token, Int& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

DimacsError::DimacsError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + kind_prefix(kind) + ": " + what),
      kind_(kind),
      line_(line) {}

MultiFormula read_dimacs(std::istream& in, std::uint32_t arity) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  MultiFormula f;
  std::vector<Literal> lits;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == 'c' || tokens[0] == "%") continue;
    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf" || !parse_int(tokens[2], n) ||
          !parse_int(tokens[3], m)) {
        throw DimacsError(DimacsError::Kind::MalformedHeader, line_no, "expected 'p cnf <n> <m>'");
      }
      have_header = true;
      f = MultiFormula(n, arity);
      f.reserve(m, 2 * m);
      continue;
    }
    if (tokens[0] == "p") throw DimacsError(DimacsError::Kind::MalformedHeader, line_no, "duplicate header");
    lits.clear();
    bool terminated = false;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      std::int64_t value = 0;
      if (!parse_int(tokens[t], value)) {
        throw DimacsError(DimacsError::Kind::BadToken, line_no, std::string(tokens[t]));
      }
      if (value == 0) {
        if (t + 1 != tokens.size()) {
          throw DimacsError(DimacsError::Kind::BadToken, line_no, "tokens after terminator");
        }
        terminated = true;
        break;
      }
      auto var = value > 0 ? value : -value;
      if (var > static_cast<std::int64_t>(n)) {
        throw DimacsError(DimacsError::Kind::IndexOutOfRange, line_no,
                          std::to_string(value) + " with n = " + std::to_string(n));
      }
      lits.push_back(Literal::from_dimacs(value));
    }
    if (!terminated) throw DimacsError(DimacsError::Kind::MissingTerminator, line_no, line);
    f.add_clause(lits);
  }
  if (!have_header) throw DimacsError(DimacsError::Kind::MalformedHeader, line_no, "no header");
  if (f.num_clauses() != m) {
    throw DimacsError(DimacsError::Kind::ClauseCount, line_no,
                      "header declares " + std::to_string(m) + ", found " + std::to_string(f.num_clauses()));
  }
  return f;
}

MultiFormula parse_dimacs(const std::string& text, std::uint32_t arity) {
  std::istringstream in(text);
  return read_dimacs(in, arity);
}

void write_dimacs(const MultiFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    for (Literal y : f.clause(i)) out << y.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const MultiFormula& f) {
  std::ostringstream out;
  write_dimacs(f, out);
  return out.str();
}

}  // namespace satcore
