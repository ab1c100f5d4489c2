#include <doctest.h>

#include "betacount/oracle.hpp"
#include "test_util.hpp"

using namespace betacount;

TEST_CASE("brute_count basics") {
  CHECK(brute_count(parse_dimacs("p cnf 2 1\n1 2 0\n")) == 3);
  CHECK(brute_count(parse_dimacs("p cnf 3 0\n")) == 8);
  CHECK(brute_count(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")) == 0);
  CHECK(brute_count(parse_dimacs("p cnf 1 1\n0\n")) == 0);
  CHECK_THROWS_AS(brute_count(CnfFormula(25)), GuardError);
}

TEST_CASE("brute_w conventions") {
  // Empty sub-instance evaluates to 1 under any assignment.
  CHECK(brute_w({}, 2, {}, EvalMode::Sum) == Rational(1));
  CHECK(brute_w({}, 3, {{1, 2}}, EvalMode::Max) == Rational(1));

  // Fully assigned single constraint: just its value.
  WeightedConstraint c(0, {1, 2}, Rational(5),
                       {{Tuple{0, 1}, Rational(7)}});
  CHECK(brute_w({&c}, 2, {{1, 0}, {2, 1}}, EvalMode::Sum) == Rational(7));
  CHECK(brute_w({&c}, 2, {{1, 1}, {2, 1}}, EvalMode::Sum) == Rational(5));
}

TEST_CASE("brute_w factorizes over variable-disjoint parts") {
  // Two constraints overlapping only inside the assigned variables.
  Rng rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    std::uint32_t domain = 2 + rng.below(2);
    auto weight = [&]() { return Rational(rng.below(5), 1 + rng.below(3)); };
    auto table = [&](std::size_t arity) {
      std::map<Tuple, Rational> supp;
      for (int i = 0; i < 3; ++i) {
        Tuple t;
        for (std::size_t j = 0; j < arity; ++j) t.push_back(rng.below(domain));
        supp.insert_or_assign(std::move(t), weight());
      }
      return supp;
    };
    WeightedConstraint c1(0, {1, 2}, weight(), table(2));
    WeightedConstraint c2(1, {2, 3}, weight(), table(2));
    PartialAssignment a{{2, rng.below(domain)}};  // shared variable pinned
    for (EvalMode mode : {EvalMode::Sum, EvalMode::Max}) {
      CHECK(brute_w({&c1, &c2}, domain, a, mode) ==
            brute_w({&c1}, domain, a, mode) *
                brute_w({&c2}, domain, a, mode));
    }
  }
}

TEST_CASE("vanishing sub-instances force the whole product to vanish") {
  Rng rng(123);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    WcspInstance inst = gen_interval_wcsp(
        testutil::interval_wcsp_spec(seed + 50, 6, 5, 3, 2, 3, 2));
    std::vector<const WeightedConstraint*> all, sub;
    for (const auto& c : inst.constraints) {
      all.push_back(&c);
      if (rng.coin()) sub.push_back(&c);
    }
    PartialAssignment a;
    for (VarId v : inst.variables()) {
      if (rng.coin()) a[v] = rng.below(inst.domain_size);
    }
    if (brute_w(sub, inst.domain_size, a, EvalMode::Sum).is_zero()) {
      CHECK(brute_w(all, inst.domain_size, a, EvalMode::Sum).is_zero());
    }
  }
}

TEST_CASE("brute_chordal_bipartite on hand-built graphs") {
  // The incidence graph of a triangle is a chordless 6-cycle.
  auto six_cycle = incidence_graph(Hypergraph::from_edges({{1, 2}, {2, 3},
                                                           {3, 1}}));
  CHECK(!brute_chordal_bipartite(six_cycle));

  // Extending one edge to the full vertex set adds a chord into the cycle.
  auto chorded = incidence_graph(Hypergraph::from_edges({{1, 2}, {2, 3},
                                                         {1, 2, 3}}));
  CHECK(brute_chordal_bipartite(chorded));

  // Acyclic incidence graph.
  auto tree = incidence_graph(Hypergraph::from_edges({{1}, {1, 2}}));
  CHECK(brute_chordal_bipartite(tree));

  std::vector<VarId> wide(16);
  for (VarId v = 1; v <= 16; ++v) wide[v - 1] = v;
  auto big = incidence_graph(Hypergraph::from_edges({wide}));
  CHECK_THROWS_AS(brute_chordal_bipartite(big), GuardError);
}

TEST_CASE("brute_max_sat basics") {
  CHECK(brute_max_sat(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")) == 1);
  CHECK(brute_max_sat(parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n")) == 2);
  // A tautology always counts as satisfied.
  CHECK(brute_max_sat(parse_dimacs("p cnf 1 2\n1 0\n1 -1 0\n")) == 2);
  // Empty clauses are never satisfiable.
  CHECK(brute_max_sat(parse_dimacs("p cnf 1 2\n1 0\n0\n")) == 1);
  CHECK_THROWS_AS(brute_max_sat(CnfFormula(25)), GuardError);
}

TEST_CASE("oracles agree across the encodings") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    CnfFormula f =
        gen_interval_cnf(testutil::interval_cnf_spec(seed + 10, 8, 9, 3));
    WcspInstance count = cnf_to_count_instance(f);
    Rational w = brute_w(count, {}, EvalMode::Sum);
    CHECK(w.den() == 1);
    mpz_class scaled = w.num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
                 isolated_variables(f));
    CHECK(scaled == brute_count(f));

    WcspInstance max_inst = cnf_to_max_instance(f);
    Rational m = brute_w(max_inst, {}, EvalMode::Max);
    unsigned long exponent = 0;
    REQUIRE(m.is_power_of_two(&exponent));
    CHECK(exponent + f.tautology_count() == brute_max_sat(f));
  }
}

TEST_CASE("brute_w guard") {
  std::vector<WeightedConstraint> cs;
  std::vector<const WeightedConstraint*> ptrs;
  for (VarId v = 1; v <= 25; ++v) {
    cs.emplace_back(v, std::vector<VarId>{v}, Rational(1),
                    std::map<Tuple, Rational>{});
  }
  for (const auto& c : cs) ptrs.push_back(&c);
  CHECK_THROWS_AS(brute_w(ptrs, 2, {}, EvalMode::Sum), GuardError);
}
