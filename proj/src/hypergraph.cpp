#include "betacount/hypergraph.hpp"

#include <algorithm>

namespace betacount {

namespace {

void canonicalize_vertex_list(std::vector<VarId>* vs) {
  std::sort(vs->begin(), vs->end());
  vs->erase(std::unique(vs->begin(), vs->end()), vs->end());
}

// Both inputs sorted.
bool is_subset(const std::vector<VarId>& small, const std::vector<VarId>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Hypergraph::Hypergraph(std::vector<VarId> vertices,
                       std::vector<std::vector<VarId>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  canonicalize_vertex_list(&vertices_);
  for (auto& e : edges_) {
    check(!e.empty(), "Hypergraph: empty edge");
    canonicalize_vertex_list(&e);
    check(is_subset(e, vertices_), "Hypergraph: edge not within vertex set");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::from_edges(std::vector<std::vector<VarId>> edges) {
  std::vector<VarId> vertices;
  for (const auto& e : edges) {
    vertices.insert(vertices.end(), e.begin(), e.end());
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

bool Hypergraph::has_vertex(VarId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Hypergraph::size() const {
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.size();
  return total;
}

bool is_nest_point(const Hypergraph& h, VarId x) {
  if (!h.has_vertex(x)) throw InternalError("is_nest_point: unknown vertex");
  std::vector<const std::vector<VarId>*> incident;
  for (const auto& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), x)) incident.push_back(&e);
  }
  std::sort(incident.begin(), incident.end(),
            [](const auto* a, const auto* b) { return a->size() < b->size(); });
  // Distinct edges sorted by size form a chain iff adjacent pairs are nested.
  for (std::size_t i = 0; i + 1 < incident.size(); ++i) {
    if (!is_subset(*incident[i], *incident[i + 1])) return false;
  }
  return true;
}

Hypergraph remove_vertex(const Hypergraph& h, VarId x) {
  if (!h.has_vertex(x)) throw InternalError("remove_vertex: unknown vertex");
  std::vector<VarId> vertices;
  vertices.reserve(h.vertices().size() - 1);
  for (VarId v : h.vertices()) {
    if (v != x) vertices.push_back(v);
  }
  std::vector<std::vector<VarId>> edges;
  for (const auto& e : h.edges()) {
    std::vector<VarId> reduced;
    reduced.reserve(e.size());
    for (VarId v : e) {
      if (v != x) reduced.push_back(v);
    }
    if (!reduced.empty()) edges.push_back(std::move(reduced));
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

std::variant<EliminationOrder, NotBetaAcyclic> beta_elimination_order(
    const Hypergraph& h) {
  Hypergraph residual = h;
  EliminationOrder result;
  result.order.reserve(h.vertices().size());
  while (!residual.empty()) {
    bool found = false;
    for (VarId v : residual.vertices()) {  // ascending: smallest-id tie-break
      if (is_nest_point(residual, v)) {
        result.order.push_back(v);
        residual = remove_vertex(residual, v);
        found = true;
        break;
      }
    }
    if (!found) {
      return NotBetaAcyclic{residual.vertices()};
    }
  }
  return result;
}

bool is_valid_elimination_order(const Hypergraph& h,
                                const EliminationOrder& order) {
  std::vector<VarId> sorted = order.order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != h.vertices()) return false;
  Hypergraph residual = h;
  for (VarId v : order.order) {
    if (!is_nest_point(residual, v)) return false;
    residual = remove_vertex(residual, v);
  }
  return true;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph g;
  g.vars = h.vertices();
  g.edges = h.edges();
  g.adj.assign(g.num_vertices(), {});
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    std::size_t right = g.var_count() + ei;
    for (VarId v : g.edges[ei]) {
      auto it = std::lower_bound(g.vars.begin(), g.vars.end(), v);
      std::size_t left = static_cast<std::size_t>(it - g.vars.begin());
      g.adj[left].push_back(right);
      g.adj[right].push_back(left);
    }
  }
  return g;
}

}  // namespace betacount
