#include "betacount/gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "betacount/errors.hpp"
#include "betacount/hypergraph.hpp"

namespace betacount {

void GenSpec::validate() const {
  switch (kind) {
    case Kind::IntervalCnf:
    case Kind::IntervalWcsp:
      if (var_count == 0) throw std::invalid_argument("var count must be positive");
      if (count == 0) throw std::invalid_argument("instance count must be positive");
      if (min_arity == 0) throw std::invalid_argument("min arity must be positive");
      if (min_arity > max_arity) {
        throw std::invalid_argument("min arity exceeds max arity");
      }
      if (max_arity > var_count) {
        throw std::invalid_argument("arity bound exceeds variable count");
      }
      if (kind == Kind::IntervalWcsp) {
        if (domain_size == 0) throw std::invalid_argument("domain must be non-empty");
        if (max_weight_den == 0) {
          throw std::invalid_argument("max denominator must be positive");
        }
      }
      break;
    case Kind::HardPs:
      if (base_vertices == 0) {
        throw std::invalid_argument("base vertex count must be positive");
      }
      if (regular_degree != 0) {
        if (regular_degree >= base_vertices) {
          throw std::invalid_argument("degree must be below the vertex count");
        }
        if (std::uint64_t(regular_degree) * base_vertices % 2 != 0) {
          throw std::invalid_argument("regular graph needs even degree sum");
        }
      } else if (edge_prob < 0.0 || edge_prob > 1.0) {
        throw std::invalid_argument("edge probability outside [0, 1]");
      }
      break;
  }
}

std::uint32_t Rng::below(std::uint32_t n) {
  check(n >= 1, "Rng::below: empty range");
  // Rejection sampling keeps the draw unbiased.
  std::uint64_t limit = std::uint64_t(~std::uint64_t{0}) / n * n;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return static_cast<std::uint32_t>(draw % n);
}

bool Rng::bernoulli(double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return next() < static_cast<std::uint64_t>(
                      p * static_cast<double>(~std::uint64_t{0}));
}

namespace {

struct Interval {
  std::uint32_t lo, hi;  // inclusive positions in the layout order
};

bool laminar_compatible(const Interval& a, const std::vector<Interval>& existing) {
  for (const Interval& b : existing) {
    bool disjoint = a.hi < b.lo || b.hi < a.lo;
    bool a_in_b = b.lo <= a.lo && a.hi <= b.hi;
    bool b_in_a = a.lo <= b.lo && b.hi <= a.hi;
    if (!disjoint && !a_in_b && !b_in_a) return false;
  }
  return true;
}

// A random laminar interval family over a shuffled variable order; each
// scope is returned as a sorted set of variable ids.
std::vector<std::vector<VarId>> laminar_scopes(const GenSpec& spec, Rng& rng) {
  const std::uint32_t n = spec.var_count;
  std::vector<VarId> layout(n);
  for (std::uint32_t i = 0; i < n; ++i) layout[i] = i + 1;
  for (std::uint32_t i = n; i > 1; --i) {  // Fisher-Yates
    std::swap(layout[i - 1], layout[rng.below(i)]);
  }

  std::vector<Interval> intervals;
  intervals.reserve(spec.count);
  for (std::uint32_t i = 0; i < spec.count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      std::uint32_t width = rng.range(spec.min_arity, spec.max_arity);
      std::uint32_t lo = rng.below(n - width + 1);
      Interval cand{lo, lo + width - 1};
      if (laminar_compatible(cand, intervals)) {
        intervals.push_back(cand);
        placed = true;
      }
    }
    if (!placed) {
      throw std::invalid_argument(
          "cannot place the requested number of laminar intervals");
    }
  }

  std::vector<std::vector<VarId>> scopes;
  scopes.reserve(intervals.size());
  for (const Interval& iv : intervals) {
    std::vector<VarId> scope;
    scope.reserve(iv.hi - iv.lo + 1);
    for (std::uint32_t p = iv.lo; p <= iv.hi; ++p) scope.push_back(layout[p]);
    std::sort(scope.begin(), scope.end());
    scopes.push_back(std::move(scope));
  }
  return scopes;
}

void assert_beta_acyclic(const Hypergraph& h) {
  check(std::holds_alternative<EliminationOrder>(beta_elimination_order(h)),
        "generator postcondition: output must be beta-acyclic");
}

}  // namespace

CnfFormula gen_interval_cnf(const GenSpec& spec) {
  spec.validate();
  check(spec.kind == GenSpec::Kind::IntervalCnf, "gen_interval_cnf: wrong kind");
  Rng rng(spec.seed);
  auto scopes = laminar_scopes(spec, rng);

  CnfFormula formula(spec.var_count);
  for (const auto& scope : scopes) {
    std::vector<Literal> lits;
    lits.reserve(scope.size());
    for (VarId v : scope) lits.push_back(Literal{v, rng.coin()});
    formula.add_clause(std::move(lits));
  }
  assert_beta_acyclic(formula_hypergraph(formula));
  return formula;
}

WcspInstance gen_interval_wcsp(const GenSpec& spec) {
  spec.validate();
  check(spec.kind == GenSpec::Kind::IntervalWcsp, "gen_interval_wcsp: wrong kind");
  Rng rng(spec.seed);
  auto scopes = laminar_scopes(spec, rng);

  auto random_weight = [&]() {
    return Rational(rng.below(spec.max_weight_num + 1),
                    rng.range(1, spec.max_weight_den));
  };

  WcspInstance instance;
  instance.domain_size = spec.domain_size;
  instance.declared_var_count = spec.var_count;
  ConstraintId next = 0;
  for (auto& scope : scopes) {
    // Support size capped by the full table and a small constant.
    std::uint64_t table = 1;
    for (std::size_t i = 0; i < scope.size() && table <= 8; ++i) {
      table *= spec.domain_size;
    }
    std::uint32_t cap = static_cast<std::uint32_t>(std::min<std::uint64_t>(table, 4));
    std::uint32_t entries = rng.below(cap + 1);
    std::map<Tuple, Rational> supp;
    for (std::uint32_t i = 0; i < entries; ++i) {
      Tuple t;
      t.reserve(scope.size());
      for (std::size_t j = 0; j < scope.size(); ++j) {
        t.push_back(rng.below(spec.domain_size));
      }
      supp.insert_or_assign(std::move(t), random_weight());
    }
    instance.constraints.emplace_back(next++, std::move(scope),
                                      random_weight(), std::move(supp));
  }
  assert_beta_acyclic(instance.hypergraph());
  return instance;
}

SimpleGraph random_base_graph(const GenSpec& spec, Rng& rng) {
  SimpleGraph g;
  g.n = spec.base_vertices;
  if (spec.regular_degree == 0) {
    for (std::size_t u = 0; u < g.n; ++u) {
      for (std::size_t v = u + 1; v < g.n; ++v) {
        if (rng.bernoulli(spec.edge_prob)) g.edges.emplace_back(u, v);
      }
    }
    return g;
  }
  // Configuration model: pair up degree stubs, retry until simple.
  const std::size_t d = spec.regular_degree;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::size_t> stubs;
    stubs.reserve(g.n * d);
    for (std::size_t v = 0; v < g.n; ++v) {
      for (std::size_t i = 0; i < d; ++i) stubs.push_back(v);
    }
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[rng.below(static_cast<std::uint32_t>(i))]);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      std::size_t u = stubs[i], v = stubs[i + 1];
      if (u == v) simple = false;
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) simple = false;
    }
    if (simple) {
      g.edges.assign(seen.begin(), seen.end());
      return g;
    }
  }
  throw std::invalid_argument("could not sample a simple regular graph");
}

SimpleGraph subdivide_edges(const SimpleGraph& g) {
  SimpleGraph out;
  out.n = g.n + g.edges.size();
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    std::size_t mid = g.n + i;
    out.edges.emplace_back(g.edges[i].first, mid);
    out.edges.emplace_back(mid, g.edges[i].second);
  }
  return out;
}

CnfFormula expansion_formula(const SimpleGraph& g) {
  const std::size_t n = g.n;
  const std::size_t m = g.edges.size();
  // Variables: x_v -> v+1 for v in [0, n); q_{e,u} -> n + 2e + 1,
  // q_{e,v} -> n + 2e + 2 for edge index e with endpoints (u, v).
  auto x_var = [&](std::size_t v) { return static_cast<VarId>(v + 1); };
  auto q_var = [&](std::size_t e, bool second) {
    return static_cast<VarId>(n + 2 * e + 1 + (second ? 1 : 0));
  };

  CnfFormula formula(n + 2 * m);

  // Clause y_w: all x variables plus q_{e,z} for every edge e = zw.
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Literal> lits;
    for (std::size_t v = 0; v < n; ++v) lits.push_back(Literal{x_var(v), true});
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = g.edges[e];
      if (v == w) lits.push_back(Literal{q_var(e, false), true});  // q_{e,u}
      if (u == w) lits.push_back(Literal{q_var(e, true), true});   // q_{e,v}
    }
    formula.add_clause(std::move(lits));
  }
  // Clauses p_{e,u} = (x_u v q_{e,u}) and p_{e,v} = (x_v v q_{e,v}).
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = g.edges[e];
    formula.add_clause({Literal{x_var(u), true}, Literal{q_var(e, false), true}});
    formula.add_clause({Literal{x_var(v), true}, Literal{q_var(e, true), true}});
  }
  return formula;
}

CnfFormula gen_hardps(const GenSpec& spec) {
  spec.validate();
  check(spec.kind == GenSpec::Kind::HardPs, "gen_hardps: wrong kind");
  Rng rng(spec.seed);
  SimpleGraph base = random_base_graph(spec, rng);
  CnfFormula formula = expansion_formula(subdivide_edges(base));
  assert_beta_acyclic(formula_hypergraph(formula));
  return formula;
}

}  // namespace betacount
