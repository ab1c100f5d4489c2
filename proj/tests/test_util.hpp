#pragma once

// Shared helpers for the unit and acceptance suites.

#include <algorithm>
#include <string>
#include <vector>

#include "betacount/formula.hpp"
#include "betacount/gen.hpp"
#include "betacount/hypergraph.hpp"
#include "betacount/wcsp.hpp"

namespace betacount::testutil {

inline std::vector<VarId> nest_points(const Hypergraph& h) {
  std::vector<VarId> out;
  for (VarId v : h.vertices()) {
    if (is_nest_point(h, v)) out.push_back(v);
  }
  return out;
}

// A full elimination order beginning at the chosen nest point; valid
// whenever the hypergraph is beta-acyclic.
inline EliminationOrder order_starting_at(const Hypergraph& h, VarId x) {
  auto rest = beta_elimination_order(remove_vertex(h, x));
  EliminationOrder order;
  order.order.push_back(x);
  for (VarId v : std::get<EliminationOrder>(rest).order) {
    order.order.push_back(v);
  }
  return order;
}

// Random hypergraph with 1..max_vertices vertices and 0..max_edges edges of
// random sizes; no structure imposed, so most draws are cyclic.
inline Hypergraph random_hypergraph(Rng& rng, std::uint32_t max_vertices,
                                    std::uint32_t max_edges) {
  std::uint32_t n = rng.range(1, max_vertices);
  std::uint32_t m = rng.below(max_edges + 1);
  std::vector<std::vector<VarId>> edges;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint32_t size = rng.range(1, n);
    std::vector<VarId> pool(n);
    for (std::uint32_t v = 0; v < n; ++v) pool[v] = v + 1;
    for (std::uint32_t j = n; j > 1; --j) {
      std::swap(pool[j - 1], pool[rng.below(j)]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    edges.push_back(std::move(pool));
  }
  return Hypergraph::from_edges(std::move(edges));
}

// The monotone formula whose clause scopes are the hypergraph edges.
inline CnfFormula monotone_formula(const Hypergraph& h) {
  VarId max_var = h.vertices().empty() ? 0 : h.vertices().back();
  CnfFormula f(max_var);
  for (const auto& e : h.edges()) {
    std::vector<Literal> lits;
    for (VarId v : e) lits.push_back(Literal{v, true});
    f.add_clause(std::move(lits));
  }
  return f;
}

inline GenSpec interval_cnf_spec(std::uint64_t seed, std::uint32_t vars,
                                 std::uint32_t clauses,
                                 std::uint32_t max_arity) {
  GenSpec spec;
  spec.kind = GenSpec::Kind::IntervalCnf;
  spec.seed = seed;
  spec.var_count = vars;
  spec.count = clauses;
  spec.min_arity = 1;
  spec.max_arity = std::min(max_arity, vars);
  return spec;
}

inline GenSpec interval_wcsp_spec(std::uint64_t seed, std::uint32_t vars,
                                  std::uint32_t constraints,
                                  std::uint32_t max_arity,
                                  std::uint32_t domain,
                                  std::uint32_t max_num,
                                  std::uint32_t max_den) {
  GenSpec spec;
  spec.kind = GenSpec::Kind::IntervalWcsp;
  spec.seed = seed;
  spec.var_count = vars;
  spec.count = constraints;
  spec.min_arity = 1;
  spec.max_arity = std::min(max_arity, vars);
  spec.domain_size = domain;
  spec.max_weight_num = max_num;
  spec.max_weight_den = max_den;
  return spec;
}

}  // namespace betacount::testutil
