#include <doctest.h>

#include <variant>

#include "betacount/gen.hpp"
#include "betacount/oracle.hpp"
#include "test_util.hpp"

using namespace betacount;

namespace {

bool laminar(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::vector<VarId> inter;
      std::set_intersection(edges[i].begin(), edges[i].end(),
                            edges[j].begin(), edges[j].end(),
                            std::back_inserter(inter));
      bool disjoint = inter.empty();
      bool nested = inter.size() == edges[i].size() ||
                    inter.size() == edges[j].size();
      if (!disjoint && !nested) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("interval generator is deterministic and beta-acyclic") {
  GenSpec spec = testutil::interval_cnf_spec(42, 10, 12, 4);
  CnfFormula a = gen_interval_cnf(spec);
  CnfFormula b = gen_interval_cnf(spec);
  CHECK(a == b);
  CHECK(serialize_dimacs(a) == serialize_dimacs(b));

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CnfFormula f =
        gen_interval_cnf(testutil::interval_cnf_spec(seed, 10, 14, 4));
    Hypergraph h = formula_hypergraph(f);
    CHECK(laminar(h));
    CHECK(std::holds_alternative<EliminationOrder>(beta_elimination_order(h)));
  }
}

TEST_CASE("interval generator minimal spec") {
  CnfFormula f = gen_interval_cnf(testutil::interval_cnf_spec(3, 1, 1, 1));
  REQUIRE(f.clauses().size() == 1);
  CHECK(f.clauses()[0].size() == 1);
}

TEST_CASE("interval generator rejects impossible specs") {
  GenSpec bad = testutil::interval_cnf_spec(1, 4, 3, 3);
  bad.min_arity = 5;
  CHECK_THROWS_AS(gen_interval_cnf(bad), std::invalid_argument);
  GenSpec zero = testutil::interval_cnf_spec(1, 4, 3, 3);
  zero.count = 0;
  CHECK_THROWS_AS(gen_interval_cnf(zero), std::invalid_argument);
}

TEST_CASE("wcsp generator: bounds, determinism, acyclicity") {
  GenSpec spec = testutil::interval_wcsp_spec(7, 8, 6, 3, 3, 9, 5);
  WcspInstance a = gen_interval_wcsp(spec);
  WcspInstance b = gen_interval_wcsp(spec);
  CHECK(a == b);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    WcspInstance inst = gen_interval_wcsp(
        testutil::interval_wcsp_spec(seed, 8, 6, 3, 2 + seed % 3, 9, 5));
    CHECK(std::holds_alternative<EliminationOrder>(
        beta_elimination_order(inst.hypergraph())));
    for (const auto& c : inst.constraints) {
      CHECK(c.default_value.num() <= 9);
      CHECK(c.default_value.den() <= 5);
      for (const auto& [t, v] : c.support) {
        CHECK(v.num() <= 9);
        CHECK(v.den() <= 5);
        CHECK(t.size() == c.scope.size());
      }
    }
  }
}

TEST_CASE("expansion of a single edge") {
  SimpleGraph edge{2, {{0, 1}}};
  CnfFormula f = expansion_formula(edge);
  CHECK(f.declared_var_count() == 4);  // two hub + two connector variables
  REQUIRE(f.clauses().size() == 4);    // two hub + two link clauses
  // Hand-derived clause sets under the generator's numbering.
  CHECK(f.clauses()[0].variables() == std::vector<VarId>{1, 2, 4});
  CHECK(f.clauses()[1].variables() == std::vector<VarId>{1, 2, 3});
  CHECK(f.clauses()[2].variables() == std::vector<VarId>{1, 3});
  CHECK(f.clauses()[3].variables() == std::vector<VarId>{2, 4});
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c.literals()) CHECK(l.positive);
  }
  Hypergraph h = formula_hypergraph(f);
  CHECK(std::holds_alternative<EliminationOrder>(beta_elimination_order(h)));
  CHECK(brute_chordal_bipartite(incidence_graph(h)));
}

TEST_CASE("hardps outputs are monotone, beta-acyclic, deterministic") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::HardPs;
  spec.base_vertices = 6;
  spec.edge_prob = 0.5;
  spec.seed = 11;
  CnfFormula a = gen_hardps(spec);
  CnfFormula b = gen_hardps(spec);
  CHECK(a == b);
  for (const Clause& c : a.clauses()) {
    for (const Literal& l : c.literals()) CHECK(l.positive);
  }
  CHECK(std::holds_alternative<EliminationOrder>(
      beta_elimination_order(formula_hypergraph(a))));
}

TEST_CASE("hardps small bases cross-checked against the oracles") {
  // Base: a single edge; after subdivision the formula has 7 variables, so
  // the 14-vertex incidence graph fits the chordal-bipartite oracle.
  GenSpec tiny;
  tiny.kind = GenSpec::Kind::HardPs;
  tiny.base_vertices = 2;
  tiny.edge_prob = 1.0;
  tiny.seed = 1;
  CnfFormula f = gen_hardps(tiny);
  CHECK(f.declared_var_count() == 7);
  Hypergraph h = formula_hypergraph(f);
  CHECK(brute_chordal_bipartite(incidence_graph(h)));
  CHECK(brute_beta_acyclic(h));

  // A perfect matching on four base vertices: 14 formula variables; the
  // independent subset-search oracle still fits.
  GenSpec match;
  match.kind = GenSpec::Kind::HardPs;
  match.base_vertices = 4;
  match.regular_degree = 1;
  match.seed = 3;
  CnfFormula g = gen_hardps(match);
  CHECK(g.declared_var_count() == 14);
  CHECK(brute_beta_acyclic(formula_hypergraph(g)));
}

TEST_CASE("regular base graphs have the requested degree") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::HardPs;
  spec.base_vertices = 10;
  spec.regular_degree = 3;
  spec.seed = 5;
  Rng rng(spec.seed);
  SimpleGraph g = random_base_graph(spec, rng);
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    CHECK(u != v);
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg) CHECK(d == 3);
}

TEST_CASE("generator spec validation") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::HardPs;
  spec.base_vertices = 5;
  spec.regular_degree = 3;  // odd degree sum
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.regular_degree = 6;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.regular_degree = 0;
  spec.edge_prob = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  GenSpec iv = testutil::interval_cnf_spec(0, 5, 5, 3);
  iv.min_arity = 0;
  CHECK_THROWS_AS(iv.validate(), std::invalid_argument);
}
