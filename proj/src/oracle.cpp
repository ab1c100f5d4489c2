#include "betacount/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "betacount/errors.hpp"

namespace betacount {

namespace {

constexpr std::size_t kEnumGuard = 24;
constexpr std::size_t kGraphGuard = 16;

}  // namespace

mpz_class brute_count(const CnfFormula& f) {
  const std::size_t n = f.declared_var_count();
  if (n > kEnumGuard) {
    throw GuardError("brute_count: more than 24 declared variables");
  }
  if (f.empty_clause_count() > 0) return 0;

  // Bit v-1 of an assignment word is the value of variable v.
  std::vector<std::uint32_t> pos_mask, neg_mask;
  for (const Clause& c : f.clauses()) {
    std::uint32_t pos = 0, neg = 0;
    for (const Literal& l : c.literals()) {
      (l.positive ? pos : neg) |= 1u << (l.variable - 1);
    }
    pos_mask.push_back(pos);
    neg_mask.push_back(neg);
  }
  mpz_class count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    bool ok = true;
    for (std::size_t i = 0; i < pos_mask.size(); ++i) {
      if ((a & pos_mask[i]) == 0 && (~a & neg_mask[i]) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

Rational brute_w(const std::vector<const WeightedConstraint*>& constraints,
                 std::uint32_t domain_size, const PartialAssignment& a,
                 EvalMode mode) {
  check(domain_size >= 1, "brute_w: empty domain");

  std::vector<VarId> vars;
  for (const auto* c : constraints) {
    vars.insert(vars.end(), c->scope.begin(), c->scope.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  std::vector<VarId> free_vars;
  std::map<VarId, DomainValue> value;
  for (VarId v : vars) {
    auto it = a.find(v);
    if (it == a.end()) {
      free_vars.push_back(v);
      value[v] = 0;
    } else {
      value[v] = it->second;
    }
  }
  if (free_vars.size() > kEnumGuard) {
    throw GuardError("brute_w: more than 24 free variables");
  }

  Rational acc(0);
  bool first = true;
  Tuple scratch;
  while (true) {
    Rational prod(1);
    for (const auto* c : constraints) {
      scratch.clear();
      for (VarId v : c->scope) scratch.push_back(value[v]);
      prod *= c->value_at(scratch);
      if (prod.is_zero()) break;
    }
    if (mode == EvalMode::Sum) {
      acc += prod;
    } else if (first || prod > acc) {
      acc = prod;
    }
    first = false;

    // Odometer over the free variables.
    std::size_t i = 0;
    for (; i < free_vars.size(); ++i) {
      DomainValue& d = value[free_vars[i]];
      if (++d < domain_size) break;
      d = 0;
    }
    if (i == free_vars.size()) break;
  }
  return acc;
}

Rational brute_w(const WcspInstance& instance, const PartialAssignment& a,
                 EvalMode mode) {
  std::vector<const WeightedConstraint*> ptrs;
  ptrs.reserve(instance.constraints.size());
  for (const auto& c : instance.constraints) ptrs.push_back(&c);
  return instance.scalar * brute_w(ptrs, instance.domain_size, a, mode);
}

bool brute_chordal_bipartite(const IncidenceGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kGraphGuard) {
    throw GuardError("brute_chordal_bipartite: more than 16 vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : g.adj[v]) adj[v] |= 1u << u;
  }

  // Two-colorability (trivially true for incidence graphs).
  {
    std::vector<int> color(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      std::vector<std::size_t> queue{s};
      while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        for (std::size_t u = 0; u < n; ++u) {
          if (!(adj[v] >> u & 1)) continue;
          if (color[u] == -1) {
            color[u] = 1 - color[v];
            queue.push_back(u);
          } else if (color[u] == color[v]) {
            return false;
          }
        }
      }
    }
  }

  // Search for a chordless cycle of length >= 6: extend induced paths from
  // the smallest cycle vertex s. A candidate u may close the cycle iff it is
  // adjacent to s; it may extend the path iff it is not (a later closing
  // edge would leave u-s as a chord). Direction is canonicalized by
  // path[1] < u at closing time.
  std::vector<std::size_t> path;
  std::function<bool(std::size_t, std::uint32_t)> extend =
      [&](std::size_t s, std::uint32_t used) -> bool {
    std::size_t last = path.back();
    std::uint32_t middle = used & ~(1u << s) & ~(1u << last);
    for (std::size_t u = s + 1; u < n; ++u) {
      if (used >> u & 1) continue;
      if (!(adj[last] >> u & 1)) continue;
      if (adj[u] & middle) continue;  // chord to a middle vertex
      if (adj[u] >> s & 1) {
        if (path.size() + 1 >= 6 && path[1] < u) return true;
      } else {
        path.push_back(u);
        if (extend(s, used | 1u << u)) return true;
        path.pop_back();
      }
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t v = s + 1; v < n; ++v) {
      if (!(adj[s] >> v & 1)) continue;
      path = {s, v};
      if (extend(s, (1u << s) | (1u << v))) return false;
    }
  }
  return true;
}

std::uint64_t brute_max_sat(const CnfFormula& f) {
  const std::size_t n = f.declared_var_count();
  if (n > kEnumGuard) {
    throw GuardError("brute_max_sat: more than 24 declared variables");
  }
  std::vector<std::uint32_t> pos_mask, neg_mask;
  for (const Clause& c : f.clauses()) {
    std::uint32_t pos = 0, neg = 0;
    for (const Literal& l : c.literals()) {
      (l.positive ? pos : neg) |= 1u << (l.variable - 1);
    }
    pos_mask.push_back(pos);
    neg_mask.push_back(neg);
  }
  std::uint64_t best = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    std::uint64_t sat = 0;
    for (std::size_t i = 0; i < pos_mask.size(); ++i) {
      if ((a & pos_mask[i]) != 0 || (~a & neg_mask[i]) != 0) ++sat;
    }
    best = std::max(best, sat);
  }
  return best + f.tautology_count();
}

bool brute_beta_acyclic(const Hypergraph& h) {
  const std::size_t n = h.vertices().size();
  if (n > kGraphGuard) {
    throw GuardError("brute_beta_acyclic: more than 16 vertices");
  }
  // Vertices as bit positions; edges as bit masks.
  std::vector<std::uint32_t> edges;
  for (const auto& e : h.edges()) {
    std::uint32_t mask = 0;
    for (VarId v : e) {
      auto it = std::lower_bound(h.vertices().begin(), h.vertices().end(), v);
      mask |= 1u << (it - h.vertices().begin());
    }
    edges.push_back(mask);
  }

  auto nest_point_in = [&](std::uint32_t residual, std::size_t v) {
    std::vector<std::uint32_t> incident;
    for (std::uint32_t e : edges) {
      std::uint32_t cut = e & residual;
      if (cut >> v & 1) incident.push_back(cut);
    }
    std::sort(incident.begin(), incident.end(),
              [](std::uint32_t a, std::uint32_t b) {
                return std::popcount(a) < std::popcount(b);
              });
    for (std::size_t i = 0; i + 1 < incident.size(); ++i) {
      if (incident[i] & ~incident[i + 1]) return false;
    }
    return true;
  };

  std::set<std::uint32_t> dead;  // residuals with no removal sequence
  std::function<bool(std::uint32_t)> removable =
      [&](std::uint32_t residual) -> bool {
    if (residual == 0) return true;
    if (dead.count(residual)) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(residual >> v & 1)) continue;
      if (nest_point_in(residual, v) && removable(residual & ~(1u << v))) {
        return true;
      }
    }
    dead.insert(residual);
    return false;
  };
  return removable(n == 32 ? ~0u : (1u << n) - 1);
}

}  // namespace betacount
