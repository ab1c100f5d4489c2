#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "betacount/hypergraph.hpp"
#include "betacount/types.hpp"

namespace betacount {

struct Literal {
  VarId variable;  // >= 1
  bool positive;

  bool operator==(const Literal&) const = default;
};

// A clause with pairwise-distinct variables, literals sorted by variable.
// Duplicate literals are merged on construction; an opposite-polarity pair
// must be filtered out before a Clause is built (see CnfFormula::add_clause).
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::vector<VarId> variables() const;
  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }

  // The unique assignment of the clause's variables that falsifies it,
  // indexed by the sorted variable order (positive literal -> 0, negative
  // literal -> 1).
  Tuple falsifying_assignment() const;

  bool operator==(const Clause&) const = default;

 private:
  std::vector<Literal> literals_;
};

// A preprocessed CNF formula. Tautological clauses are removed and counted,
// empty clauses are counted but not stored, duplicate literals are merged.
class CnfFormula {
 public:
  enum class ClauseFate { Stored, Tautology, Empty };

  explicit CnfFormula(std::size_t declared_var_count = 0)
      : declared_var_count_(declared_var_count) {}

  // Normalizes and classifies the clause; rejects variables outside
  // [1, declared_var_count].
  ClauseFate add_clause(std::vector<Literal> literals);

  std::size_t declared_var_count() const { return declared_var_count_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t tautology_count() const { return tautology_count_; }
  std::size_t empty_clause_count() const { return empty_clause_count_; }

  // Distinct variables occurring in stored clauses, sorted.
  std::vector<VarId> used_variables() const;

  // Non-fatal findings from parsing (e.g. header clause-count mismatch).
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  // Compares the serializable content; preprocessing counters and warnings
  // are bookkeeping, not content.
  bool operator==(const CnfFormula& o) const {
    return declared_var_count_ == o.declared_var_count_ &&
           clauses_ == o.clauses_;
  }

 private:
  std::size_t declared_var_count_;
  std::vector<Clause> clauses_;
  std::size_t tautology_count_ = 0;
  std::size_t empty_clause_count_ = 0;
  std::vector<std::string> warnings_;
};

// Parses DIMACS CNF: 'c' comment lines, a 'p cnf <vars> <clauses>' header,
// zero-terminated clauses. Throws ParseError (with a line number) on
// malformed input; a header clause-count mismatch is only a warning.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

// 'p cnf <vars> <clauses>' over the stored clauses, literals sorted by
// variable, one zero-terminated clause per line.
std::string serialize_dimacs(const CnfFormula& f);

// Vertices: variables of stored clauses. Edges: the distinct variable sets of
// stored clauses. Declared-but-unused variables are not vertices.
Hypergraph formula_hypergraph(const CnfFormula& f);

// Number of declared variables that occur in no stored clause. Each one
// doubles the model count and never affects a maximization.
std::size_t isolated_variables(const CnfFormula& f);

}  // namespace betacount
