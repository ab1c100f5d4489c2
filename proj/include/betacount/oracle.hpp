#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "betacount/formula.hpp"
#include "betacount/hypergraph.hpp"
#include "betacount/rational.hpp"
#include "betacount/wcsp.hpp"

// Brute-force reference implementations for tests and acceptance checks.
// Each enumerates exhaustively behind a hard input-size guard and stays
// deliberately free of the structures the solver itself uses.

namespace betacount {

using PartialAssignment = std::map<VarId, DomainValue>;

// Exact model count over the declared variables. Guard: at most 24 declared
// variables.
mpz_class brute_count(const CnfFormula& f);

// The partition function (Sum) or maximum (Max) of a sub-instance under a
// partial assignment: aggregate over all extensions of `a` to the variables
// of the listed constraints. Guard: at most 24 free variables.
Rational brute_w(const std::vector<const WeightedConstraint*>& constraints,
                 std::uint32_t domain_size, const PartialAssignment& a,
                 EvalMode mode);

// Whole-instance convenience; includes the instance scalar.
Rational brute_w(const WcspInstance& instance, const PartialAssignment& a,
                 EvalMode mode);

// True iff the bipartite graph has no chordless cycle of length >= 6 (and is
// two-colorable, which holds for every incidence graph by construction).
// Guard: at most 16 vertices in total.
bool brute_chordal_bipartite(const IncidenceGraph& g);

// Maximum number of clauses satisfiable simultaneously, tautologies included.
// Guard: at most 24 declared variables.
std::uint64_t brute_max_sat(const CnfFormula& f);

// Beta-acyclicity straight from the inductive definition, by exhaustive
// search over removal sequences (memoized on residual vertex sets). Shares
// no code with the greedy implementation. Guard: at most 16 vertices.
bool brute_beta_acyclic(const Hypergraph& h);

}  // namespace betacount
