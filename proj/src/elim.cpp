#include "betacount/elim.hpp"

#include <algorithm>
#include <functional>

#include "betacount/errors.hpp"

namespace betacount {

namespace {

Tuple insert_at(const Tuple& t, std::size_t pos, DomainValue d) {
  Tuple out;
  out.reserve(t.size() + 1);
  out.insert(out.end(), t.begin(), t.begin() + pos);
  out.push_back(d);
  out.insert(out.end(), t.begin() + pos, t.end());
  return out;
}

Tuple erase_at(const Tuple& t, std::size_t pos) {
  Tuple out;
  out.reserve(t.size() - 1);
  out.insert(out.end(), t.begin(), t.begin() + pos);
  out.insert(out.end(), t.begin() + pos + 1, t.end());
  return out;
}

// Positions of the (sorted) subset scope inside the (sorted) superset scope.
std::vector<std::size_t> embedding(const std::vector<VarId>& sub,
                                   const std::vector<VarId>& super) {
  std::vector<std::size_t> emb;
  emb.reserve(sub.size());
  std::size_t j = 0;
  for (VarId v : sub) {
    while (j < super.size() && super[j] < v) ++j;
    check(j < super.size() && super[j] == v,
          "eliminate: scopes do not form an inclusion chain");
    emb.push_back(j++);
  }
  return emb;
}

Tuple restrict_tuple(const Tuple& t, const std::vector<std::size_t>& emb) {
  Tuple out;
  out.reserve(emb.size());
  for (std::size_t pos : emb) out.push_back(t[pos]);
  return out;
}

}  // namespace

PrecComparator::PrecComparator(const EliminationOrder& order) {
  for (std::size_t i = 0; i < order.order.size(); ++i) {
    auto [it, fresh] = position_.emplace(order.order[i], i);
    check(fresh, "PrecComparator: duplicate variable in order");
  }
}

std::size_t PrecComparator::position(VarId v) const {
  auto it = position_.find(v);
  check(it != position_.end(), "PrecComparator: variable not in order");
  return it->second;
}

Ordering prec_compare(const WeightedConstraint& c, const WeightedConstraint& d,
                      const PrecComparator& prec) {
  const auto& a = c.original_scope;
  const auto& b = d.original_scope;
  if (a == b) return Ordering::Equal;

  // Walk the symmetric difference of the two sorted scopes and keep the
  // variable with the largest elimination index.
  bool found = false;
  bool best_in_d = false;
  std::size_t best_pos = 0;
  std::size_t i = 0, j = 0;
  auto consider = [&](VarId v, bool in_d) {
    std::size_t pos = prec.position(v);
    if (!found || pos > best_pos) {
      found = true;
      best_pos = pos;
      best_in_d = in_d;
    }
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      consider(a[i++], false);
    } else if (i == a.size() || b[j] < a[i]) {
      consider(b[j++], true);
    } else {
      ++i, ++j;  // shared variable
    }
  }
  check(found, "prec_compare: distinct scopes with empty symmetric difference");
  return best_in_d ? Ordering::Less : Ordering::Greater;
}

ElimState::ElimState(WcspInstance instance, EliminationOrder order,
                     EvalMode mode)
    : instance_(std::move(instance)),
      order_(std::move(order)),
      mode_(mode),
      prec_(order_) {
  std::vector<VarId> ordered = order_.order;
  std::sort(ordered.begin(), ordered.end());
  check(ordered == instance_.variables(),
        "ElimState: order must be a permutation of the instance variables");
  auto note = [this](const Rational& r) {
    if (r.num() > stats_.max_numerator) stats_.max_numerator = r.num();
    if (r.den() > stats_.max_denominator) stats_.max_denominator = r.den();
  };
  for (const auto& c : instance_.constraints) {
    alpha_[c.id] = 0;
    note(c.default_value);
    for (const auto& [tuple, value] : c.support) note(value);
  }
}

VarId ElimState::next_variable() const {
  check(!done(), "ElimState: all variables already eliminated");
  return order_.order[step_];
}

unsigned ElimState::alpha_exponent(ConstraintId id) const {
  auto it = alpha_.find(id);
  check(it != alpha_.end(), "alpha_exponent: unknown constraint");
  return it->second;
}

void ElimState::eliminate(VarId x) {
  if (done() || order_.order[step_] != x) {
    throw OrderViolationError("eliminate: variable out of order");
  }
  Hypergraph before = instance_.hypergraph();
  if (!before.has_vertex(x)) {
    throw NotANestPointError("eliminate: variable occurs in no constraint");
  }
  if (!is_nest_point(before, x)) {
    throw NotANestPointError("eliminate: variable is not a nest point");
  }
  const std::size_t size_before = instance_.table_size();
  const std::uint32_t domain = instance_.domain_size;

  // I(x), processed in the prec order on original scopes. For constraints
  // containing the nest point this order refines inclusion of the current
  // scopes, which the prefix products below depend on.
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < instance_.constraints.size(); ++i) {
    const auto& scope = instance_.constraints[i].scope;
    if (std::binary_search(scope.begin(), scope.end(), x)) chain.push_back(i);
  }
  std::stable_sort(chain.begin(), chain.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return prec_compare(instance_.constraints[a], instance_.constraints[b],
                        prec_) == Ordering::Less;
  });
  const std::size_t p = chain.size();

  // x position within each member scope, and the embedding of each scope in
  // its successor (also checks the inclusion chain).
  std::vector<std::size_t> x_pos(p);
  std::vector<std::vector<std::size_t>> embed_prev(p);
  for (std::size_t j = 0; j < p; ++j) {
    const auto& scope = instance_.constraints[chain[j]].scope;
    x_pos[j] = static_cast<std::size_t>(
        std::lower_bound(scope.begin(), scope.end(), x) - scope.begin());
    if (j > 0) {
      embed_prev[j] =
          embedding(instance_.constraints[chain[j - 1]].scope, scope);
    }
  }

  // memo[j] holds the product of the first j+1 chain members at full tuples
  // over the j-th scope; every product is derived from its predecessor by a
  // single multiplication.
  std::vector<std::map<Tuple, Rational>> memo(p);
  std::function<const Rational&(std::size_t, const Tuple&)> product =
      [&](std::size_t j, const Tuple& t) -> const Rational& {
    auto [it, fresh] = memo[j].try_emplace(t);
    if (fresh) {
      const auto& c = instance_.constraints[chain[j]];
      if (j == 0) {
        it->second = c.value_at(t);
      } else {
        it->second =
            product(j - 1, restrict_tuple(t, embed_prev[j])) * c.value_at(t);
      }
    }
    return it->second;
  };

  // Sum or max over d of the product of the first `level`+1 chain members,
  // where `projected` lives over scope(chain[j]) \ {x} and is extended with
  // x = d before evaluation (and restricted when level == j - 1).
  auto aggregate = [&](std::size_t level, std::size_t j,
                       const Tuple& projected) {
    Rational acc(0);
    for (DomainValue d = 0; d < domain; ++d) {
      Tuple full = insert_at(projected, x_pos[j], d);
      const Rational& v = level == j
                              ? product(j, full)
                              : product(level, restrict_tuple(full,
                                                              embed_prev[j]));
      if (mode_ == EvalMode::Sum) {
        acc += v;
      } else if (v > acc) {
        acc = v;
      }
    }
    return acc;
  };

  auto note = [this](const Rational& r) {
    if (r.num() > stats_.max_numerator) stats_.max_numerator = r.num();
    if (r.den() > stats_.max_denominator) stats_.max_denominator = r.den();
  };

  // Stage the replacements first; the prefix products must read the old
  // weights throughout.
  std::vector<WeightedConstraint> replacement;
  replacement.reserve(p);
  for (std::size_t j = 0; j < p; ++j) {
    const auto& c = instance_.constraints[chain[j]];
    std::map<Tuple, Rational> projected;
    for (const auto& [tuple, value] : c.support) {
      projected.try_emplace(erase_at(tuple, x_pos[j]));
    }
    for (auto& [tuple, value] : projected) {
      Rational numer = aggregate(j, j, tuple);
      Rational denom =
          j == 0 ? (mode_ == EvalMode::Sum ? Rational(domain) : Rational(1))
                 : aggregate(j - 1, j, tuple);
      value = denom.is_zero() ? Rational(0) : numer / denom;
      note(value);
    }
    WeightedConstraint next = c;
    next.scope.erase(next.scope.begin() + x_pos[j]);
    next.support = std::move(projected);
    replacement.push_back(std::move(next));
  }

  for (std::size_t j = 0; j < p; ++j) {
    instance_.constraints[chain[j]] = std::move(replacement[j]);
  }
  if (mode_ == EvalMode::Sum && p > 0) {
    ++alpha_[instance_.constraints[chain[0]].id];
  }
  ++step_;
  ++stats_.steps;

  check(instance_.table_size() <= size_before,
        "eliminate: instance size increased");
  check(instance_.hypergraph() == remove_vertex(before, x),
        "eliminate: hypergraph step mismatch");
}

Rational ElimState::residual_product() const {
  check(done(), "residual_product: elimination not finished");
  Rational result(1);
  for (const auto& c : instance_.constraints) {
    result *= c.value_at(Tuple{});
  }
  return result;
}

Rational solve(const WcspInstance& instance, EvalMode mode,
               SolveStats* stats) {
  WcspInstance merged = merge_equal_scopes(instance);
  auto order_result = beta_elimination_order(merged.hypergraph());
  if (auto* blocked = std::get_if<NotBetaAcyclic>(&order_result)) {
    throw NotBetaAcyclicError(blocked->residual_vertices);
  }
  EliminationOrder order = std::get<EliminationOrder>(std::move(order_result));
  const std::size_t var_count = order.order.size();
  const Rational scalar = merged.scalar;
  const std::uint32_t domain = merged.domain_size;

  ElimState state(std::move(merged), std::move(order), mode);
  while (!state.done()) state.eliminate_next();

  Rational result = state.residual_product() * scalar;
  if (mode == EvalMode::Sum) {
    result *= Rational::power(domain, var_count);
  }
  if (stats != nullptr) *stats = state.stats();
  return result;
}

std::map<ConstraintId, std::set<ConstraintId>> influence_sets(
    const WcspInstance& instance, const EliminationOrder& order,
    std::size_t k) {
  check(k <= order.order.size(), "influence_sets: step out of range");
  {
    std::set<std::vector<VarId>> scopes;
    for (const auto& c : instance.constraints) {
      check(scopes.insert(c.original_scope).second,
            "influence_sets: original scopes must be pairwise distinct");
    }
  }
  PrecComparator prec(order);

  std::map<ConstraintId, std::set<ConstraintId>> sets;
  for (const auto& c : instance.constraints) sets[c.id] = {c.id};

  for (std::size_t step = 0; step < k; ++step) {
    VarId x = order.order[step];
    std::vector<const WeightedConstraint*> members;
    for (const auto& c : instance.constraints) {
      if (std::binary_search(c.original_scope.begin(), c.original_scope.end(),
                             x)) {
        members.push_back(&c);
      }
    }
    std::sort(members.begin(), members.end(),
              [&](const WeightedConstraint* a, const WeightedConstraint* b) {
                return prec_compare(*a, *b, prec) == Ordering::Less;
              });
    // Ascending, so each member unions with its predecessor's already
    // updated set; the smallest member keeps its previous set.
    for (std::size_t i = 1; i < members.size(); ++i) {
      const auto& prev = sets[members[i - 1]->id];
      sets[members[i]->id].insert(prev.begin(), prev.end());
    }
  }
  return sets;
}

}  // namespace betacount
