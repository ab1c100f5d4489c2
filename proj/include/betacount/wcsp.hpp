#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "betacount/formula.hpp"
#include "betacount/hypergraph.hpp"
#include "betacount/rational.hpp"
#include "betacount/types.hpp"

namespace betacount {

enum class EvalMode { Sum, Max };

// A weighted constraint with a default value: a finite support table of
// non-negative rationals over tuples of the scope, and a default used off
// support. The induced total function is value_at().
//
// original_scope is frozen when the constraint is built and never changes,
// while scope shrinks during elimination; the constraint processing order at
// a nest point is defined on the original scopes.
struct WeightedConstraint {
  ConstraintId id = 0;
  std::vector<VarId> scope;           // sorted ascending; tuple index order
  std::vector<VarId> original_scope;  // frozen copy of scope at construction
  Rational default_value;
  std::map<Tuple, Rational> support;

  WeightedConstraint() = default;
  WeightedConstraint(ConstraintId cid, std::vector<VarId> vars, Rational def,
                     std::map<Tuple, Rational> supp);

  const Rational& value_at(const Tuple& t) const;

  // |c| = |support| * |scope|.
  std::size_t table_size() const { return support.size() * scope.size(); }

  bool operator==(const WeightedConstraint&) const = default;
};

// A finite sequence of weighted constraints over a shared 0-based domain.
// The scalar collects values of empty-scope constraints factored out during
// merging; it multiplies every evaluation result.
struct WcspInstance {
  std::uint32_t domain_size = 2;          // |D| >= 1
  std::size_t declared_var_count = 0;     // for the file header; >= max scope var
  std::vector<WeightedConstraint> constraints;
  Rational scalar = Rational(1);

  // var(I): union of scopes, sorted.
  std::vector<VarId> variables() const;

  // s(I) = sum of scope sizes.
  std::size_t structural_size() const;

  // ||I|| = sum of |c|.
  std::size_t table_size() const;

  // H(I): vertices var(I), edges the distinct non-empty scopes.
  Hypergraph hypergraph() const;

  bool operator==(const WcspInstance&) const = default;
};

// One constraint per stored clause: default 1, the unique falsifying
// assignment mapped to 0. The instance has the same hypergraph as the
// formula, and its partition function counts the models over the used
// variables. Requires empty_clause_count == 0 (callers short-circuit to 0).
WcspInstance cnf_to_count_instance(const CnfFormula& f);

// One constraint per stored clause: default 2, the falsifying assignment
// mapped to 1. The maximum of the instance is 2^s where s is the largest
// number of simultaneously satisfiable stored clauses.
WcspInstance cnf_to_max_instance(const CnfFormula& f);

// Merges constraints whose scopes are equal as sets into one (pointwise
// product; support keys are united, defaults multiply). Empty-scope
// constraints are folded into the scalar. Never increases ||I||; constraint
// ids are reassigned 0..m-1.
WcspInstance merge_equal_scopes(const WcspInstance& instance);

// scalar * w(I) in Sum mode, scalar * m(I) in Max mode, via nest-point
// elimination. Throws NotBetaAcyclicError when no elimination order exists.
Rational eval_total(const WcspInstance& instance, EvalMode mode);

// Line-oriented text format:
//   p wcspd <num_vars> <domain_size> <num_constraints>
//   con <arity> <v1> ... <vk> default <num>/<den>
//   t <d1> ... <dk> <num>/<den>        (zero or more per constraint)
// '#' starts a comment line; variables 1-based, domain values 0-based.
WcspInstance parse_wcspd(std::istream& in);
WcspInstance parse_wcspd(const std::string& text);

// Canonical form: support entries equal to the default are omitted, tuples
// appear in lexicographic order, rationals in lowest terms. A non-unit
// scalar is emitted as an arity-0 constraint.
std::string serialize_wcspd(const WcspInstance& instance);

}  // namespace betacount
