#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "betacount/hypergraph.hpp"
#include "betacount/rational.hpp"
#include "betacount/wcsp.hpp"

namespace betacount {

enum class Ordering { Less, Equal, Greater };

// Elimination position of every variable; the basis of the processing order
// on constraints.
class PrecComparator {
 public:
  PrecComparator() = default;
  explicit PrecComparator(const EliminationOrder& order);

  std::size_t position(VarId v) const;

 private:
  std::map<VarId, std::size_t> position_;
};

// Total order on constraints with pairwise-distinct original scopes.
// Equal iff the original scopes are equal sets; otherwise the variable with
// the largest elimination index in the symmetric difference decides: the
// constraint holding it is the larger one. Intuitively, the constraint whose
// scope keeps a variable longest absorbs the weights of the others, so it
// must be processed after them.
Ordering prec_compare(const WeightedConstraint& c, const WeightedConstraint& d,
                      const PrecComparator& prec);

struct SolveStats {
  // Largest numerator / denominator (lowest terms) over every weight the
  // elimination ever stored, including the input weights.
  mpz_class max_numerator = 0;
  mpz_class max_denominator = 1;
  std::size_t steps = 0;
};

// The working state of the elimination loop: the instance with shrinking
// scopes, the position k in the order, and the per-constraint normalization
// exponents t_c (the stored value of a constraint relates to a ratio of
// sub-instance partition functions scaled by |D|^{t_c}; the exponents are
// consumed only by the verification harness).
class ElimState {
 public:
  ElimState(WcspInstance instance, EliminationOrder order, EvalMode mode);

  const WcspInstance& instance() const { return instance_; }
  const EliminationOrder& order() const { return order_; }
  const PrecComparator& prec() const { return prec_; }
  EvalMode mode() const { return mode_; }

  std::size_t step() const { return step_; }
  bool done() const { return step_ == order_.order.size(); }
  VarId next_variable() const;

  unsigned alpha_exponent(ConstraintId id) const;
  const SolveStats& stats() const { return stats_; }

  // One elimination step. x must be the next variable of the order and a
  // nest point of the current hypergraph. Every constraint containing x is
  // replaced by its projection; the new value at a projected tuple is the
  // ratio of aggregated prefix products, and 0 when the denominator
  // aggregate vanishes. In Sum mode this divides the instance value by |D|
  // per step; in Max mode the value is preserved exactly.
  void eliminate(VarId x);
  void eliminate_next() { eliminate(next_variable()); }

  // After the last step every scope is empty; the product of the remaining
  // constraint values.
  Rational residual_product() const;

 private:
  WcspInstance instance_;
  EliminationOrder order_;
  EvalMode mode_;
  PrecComparator prec_;
  std::size_t step_ = 0;
  std::map<ConstraintId, unsigned> alpha_;
  SolveStats stats_;
};

// Merges equal scopes, computes a beta-elimination order (throws
// NotBetaAcyclicError with a witness if none exists), eliminates every
// variable, and returns
//   scalar * |D|^{|var(I)|} * product of residual values   (Sum)
//   scalar * product of residual values                    (Max).
Rational solve(const WcspInstance& instance, EvalMode mode,
               SolveStats* stats = nullptr);

// The set of constraints whose original weights influence each constraint
// after k elimination steps, via the step recurrence: eliminating x leaves
// the smallest constraint on x with its previous set and gives every other
// constraint on x the union with its predecessor's set. Requires pairwise
// distinct original scopes (merge first). Verification only.
std::map<ConstraintId, std::set<ConstraintId>> influence_sets(
    const WcspInstance& instance, const EliminationOrder& order,
    std::size_t k);

}  // namespace betacount
