#include "betacount/formula.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "betacount/errors.hpp"

namespace betacount {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end(),
            [](const Literal& a, const Literal& b) {
              return a.variable < b.variable ||
                     (a.variable == b.variable && a.positive < b.positive);
            });
  literals_.erase(std::unique(literals_.begin(), literals_.end()),
                  literals_.end());
  for (std::size_t i = 0; i + 1 < literals_.size(); ++i) {
    check(literals_[i].variable != literals_[i + 1].variable,
          "Clause: opposite literals on one variable");
  }
  for (const Literal& l : literals_) {
    check(l.variable >= 1, "Clause: variable ids are 1-based");
  }
}

std::vector<VarId> Clause::variables() const {
  std::vector<VarId> vars;
  vars.reserve(literals_.size());
  for (const Literal& l : literals_) vars.push_back(l.variable);
  return vars;  // sorted because literals are
}

Tuple Clause::falsifying_assignment() const {
  Tuple t;
  t.reserve(literals_.size());
  for (const Literal& l : literals_) t.push_back(l.positive ? 0 : 1);
  return t;
}

CnfFormula::ClauseFate CnfFormula::add_clause(std::vector<Literal> literals) {
  for (const Literal& l : literals) {
    check(l.variable >= 1 && l.variable <= declared_var_count_,
          "CnfFormula: variable out of declared range");
  }
  std::sort(literals.begin(), literals.end(),
            [](const Literal& a, const Literal& b) {
              return a.variable < b.variable ||
                     (a.variable == b.variable && a.positive < b.positive);
            });
  literals.erase(std::unique(literals.begin(), literals.end()),
                 literals.end());
  for (std::size_t i = 0; i + 1 < literals.size(); ++i) {
    if (literals[i].variable == literals[i + 1].variable) {
      ++tautology_count_;
      return ClauseFate::Tautology;
    }
  }
  if (literals.empty()) {
    ++empty_clause_count_;
    return ClauseFate::Empty;
  }
  clauses_.emplace_back(std::move(literals));
  return ClauseFate::Stored;
}

std::vector<VarId> CnfFormula::used_variables() const {
  std::vector<VarId> vars;
  for (const Clause& c : clauses_) {
    for (const Literal& l : c.literals()) vars.push_back(l.variable);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_int(const std::string& token, long long* out) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  }
  try {
    *out = std::stoll(token);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  long long declared_vars = -1;
  long long declared_clauses = -1;

  // Header: skip comments and blank lines until 'p cnf <vars> <clauses>'.
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first != "p") parse_fail(line_no, "expected 'p cnf' header");
    std::string fmt;
    if (!(ls >> fmt) || fmt != "cnf") {
      parse_fail(line_no, "malformed header: expected 'p cnf'");
    }
    std::string vars_tok, clauses_tok, extra;
    if (!(ls >> vars_tok >> clauses_tok)) {
      parse_fail(line_no, "malformed header: missing counts");
    }
    if (ls >> extra) parse_fail(line_no, "malformed header: trailing tokens");
    if (!parse_int(vars_tok, &declared_vars) || declared_vars < 0) {
      parse_fail(line_no, "malformed header: bad variable count");
    }
    if (!parse_int(clauses_tok, &declared_clauses) || declared_clauses < 0) {
      parse_fail(line_no, "malformed header: bad clause count");
    }
    break;
  }
  if (declared_vars < 0) parse_fail(line_no, "missing 'p cnf' header");

  CnfFormula formula(static_cast<std::size_t>(declared_vars));
  std::vector<Literal> current;
  bool in_clause = false;
  std::size_t seen_clauses = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == 'c') continue;
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      long long lit;
      if (!parse_int(token, &lit)) {
        parse_fail(line_no, "non-integer token '" + token + "'");
      }
      if (lit == 0) {
        formula.add_clause(std::move(current));
        current.clear();
        in_clause = false;
        ++seen_clauses;
        continue;
      }
      long long var = lit < 0 ? -lit : lit;
      if (var > declared_vars) {
        parse_fail(line_no, "literal " + std::to_string(lit) +
                                " outside declared variable range");
      }
      current.push_back(Literal{static_cast<VarId>(var), lit > 0});
      in_clause = true;
    }
  }
  if (in_clause) {
    parse_fail(line_no, "clause not zero-terminated at end of file");
  }
  if (seen_clauses != static_cast<std::size_t>(declared_clauses)) {
    formula.add_warning("header declares " + std::to_string(declared_clauses) +
                        " clauses but " + std::to_string(seen_clauses) +
                        " were read");
  }
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.declared_var_count() << ' ' << f.clauses().size()
      << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c.literals()) {
      if (!l.positive) out << '-';
      out << l.variable << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

Hypergraph formula_hypergraph(const CnfFormula& f) {
  std::vector<std::vector<VarId>> edges;
  edges.reserve(f.clauses().size());
  for (const Clause& c : f.clauses()) edges.push_back(c.variables());
  return Hypergraph::from_edges(std::move(edges));
}

std::size_t isolated_variables(const CnfFormula& f) {
  return f.declared_var_count() - f.used_variables().size();
}

}  // namespace betacount
