#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "betacount/errors.hpp"
#include "betacount/types.hpp"

namespace betacount {

// A finite hypergraph: a vertex set plus a set of non-empty vertex subsets.
// Vertices and edges are kept canonical (sorted, deduplicated) so that
// equality, hashing-by-comparison and subset tests are cheap and
// deterministic.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Vertices and edges are canonicalized; every edge must be a non-empty
  // subset of the vertex set.
  Hypergraph(std::vector<VarId> vertices,
             std::vector<std::vector<VarId>> edges);

  // Vertex set = union of the edges.
  static Hypergraph from_edges(std::vector<std::vector<VarId>> edges);

  const std::vector<VarId>& vertices() const { return vertices_; }
  const std::vector<std::vector<VarId>>& edges() const { return edges_; }

  bool has_vertex(VarId v) const;
  bool empty() const { return vertices_.empty(); }

  // ||H|| = sum of edge sizes.
  std::size_t size() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::vector<VarId> vertices_;             // sorted, unique
  std::vector<std::vector<VarId>> edges_;   // each sorted; lexicographically
                                            // sorted and unique as a set
};

// True iff the edges containing x form a chain under set inclusion. A vertex
// in no edge counts as a nest point (empty chain).
bool is_nest_point(const Hypergraph& h, VarId x);

// Induced subhypergraph on vertices(h) \ {x}: edges are intersected with the
// remaining vertices, empties dropped, equal results merged.
Hypergraph remove_vertex(const Hypergraph& h, VarId x);

struct EliminationOrder {
  std::vector<VarId> order;

  bool operator==(const EliminationOrder&) const = default;
};

struct NotBetaAcyclic {
  // Vertex set of the first residual hypergraph without a nest point.
  std::vector<VarId> residual_vertices;
};

// Greedy nest-point elimination: repeatedly remove the smallest-id nest point
// of the residual hypergraph. Succeeds iff the hypergraph is beta-acyclic
// (the greedy choice is never wrong for this notion of acyclicity).
std::variant<EliminationOrder, NotBetaAcyclic> beta_elimination_order(
    const Hypergraph& h);

// Checks the defining property of an elimination order step by step.
bool is_valid_elimination_order(const Hypergraph& h,
                                const EliminationOrder& order);

// Bipartite incidence graph: hypergraph vertices on the left, edges on the
// right, adjacency by containment. Combined vertex indexing puts the
// var_count left vertices first.
struct IncidenceGraph {
  std::vector<VarId> vars;                  // left labels
  std::vector<std::vector<VarId>> edges;    // right labels
  std::vector<std::vector<std::size_t>> adj;  // over var + edge vertices

  std::size_t var_count() const { return vars.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t num_vertices() const { return vars.size() + edges.size(); }
};

IncidenceGraph incidence_graph(const Hypergraph& h);

}  // namespace betacount
