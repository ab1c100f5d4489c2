#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "betacount/formula.hpp"
#include "betacount/wcsp.hpp"

// Reproducible instance generators. Everything is a pure function of the
// seed: the same GenSpec always yields the same instance, byte for byte
// after serialization.

namespace betacount {

struct GenSpec {
  enum class Kind { IntervalCnf, IntervalWcsp, HardPs };

  Kind kind = Kind::IntervalCnf;
  std::uint64_t seed = 0;

  // interval-cnf / interval-wcsp
  std::uint32_t var_count = 10;
  std::uint32_t count = 10;  // clauses or constraints
  std::uint32_t min_arity = 1;
  std::uint32_t max_arity = 3;

  // interval-wcsp only
  std::uint32_t domain_size = 2;
  std::uint32_t max_weight_num = 4;
  std::uint32_t max_weight_den = 4;

  // hardps: base graph is Erdos-Renyi with edge_prob unless regular_degree
  // is nonzero, in which case it is a random regular graph.
  std::uint32_t base_vertices = 8;
  std::uint32_t regular_degree = 0;
  double edge_prob = 0.5;

  void validate() const;  // throws std::invalid_argument
};

// Deterministic RNG with portable bounded sampling (the std distributions
// are implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), n >= 1.
  std::uint32_t below(std::uint32_t n);

  // Uniform in [lo, hi], inclusive.
  std::uint32_t range(std::uint32_t lo, std::uint32_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool coin() { return next() >> 63 & 1; }
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

// Random CNF whose clause scopes form a laminar family of intervals of a
// random variable order (any two scopes are nested or disjoint), which makes
// the formula beta-acyclic by construction. Polarities are random.
CnfFormula gen_interval_cnf(const GenSpec& spec);

// Same scope discipline with random rational weights: random default and a
// few random support entries per constraint, numerators bounded by
// max_weight_num and denominators by max_weight_den.
WcspInstance gen_interval_wcsp(const GenSpec& spec);

// A monotone beta-acyclic formula family with dense variable/clause
// interaction: sample a base graph, subdivide every edge, then expand
// (see expansion_formula). Used as a stress workload.
CnfFormula gen_hardps(const GenSpec& spec);

struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

SimpleGraph random_base_graph(const GenSpec& spec, Rng& rng);

// Replace every edge uv by a path u-w-v through a fresh vertex.
SimpleGraph subdivide_edges(const SimpleGraph& g);

// The expansion of a graph G into a monotone CNF formula: every vertex v
// contributes a variable x_v and a clause y_v, every edge e = uv contributes
// variables q_{e,u}, q_{e,v} and binary clauses p_{e,u} = (x_u v q_{e,u}),
// p_{e,v} = (x_v v q_{e,v}); every clause y_w contains all the x variables
// plus q_{e,z} for each edge e = zw. The incidence graph of the result has
// no long chordless cycle, so the formula is beta-acyclic even though the
// x/y part is a complete bipartite interaction.
CnfFormula expansion_formula(const SimpleGraph& g);

}  // namespace betacount
