#include <doctest.h>

#include "betacount/errors.hpp"
#include "betacount/oracle.hpp"
#include "betacount/wcsp.hpp"
#include "test_util.hpp"

using namespace betacount;

namespace {

// All total assignments over the given variables, as partial assignments.
std::vector<PartialAssignment> all_assignments(const std::vector<VarId>& vars,
                                               std::uint32_t domain) {
  std::vector<PartialAssignment> out;
  PartialAssignment a;
  for (VarId v : vars) a[v] = 0;
  while (true) {
    out.push_back(a);
    auto it = a.begin();
    for (; it != a.end(); ++it) {
      if (++it->second < domain) break;
      it->second = 0;
    }
    if (it == a.end()) break;
  }
  return out;
}

bool satisfies(const Clause& c, const PartialAssignment& a) {
  for (const Literal& l : c.literals()) {
    if ((a.at(l.variable) == 1) == l.positive) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("count encoding marks the unique falsifier") {
  CnfFormula f(2);
  f.add_clause({{1, true}, {2, false}});  // (x1 v -x2)
  WcspInstance inst = cnf_to_count_instance(f);
  REQUIRE(inst.constraints.size() == 1);
  const auto& c = inst.constraints[0];
  CHECK(c.scope == std::vector<VarId>{1, 2});
  CHECK(c.default_value == Rational(1));
  REQUIRE(c.support.size() == 1);
  CHECK(c.support.begin()->first == Tuple{0, 1});  // x1=0, x2=1 falsifies
  CHECK(c.support.begin()->second == Rational(0));
  CHECK(inst.table_size() == inst.structural_size());
}

TEST_CASE("count encoding of a unit clause") {
  CnfFormula f(1);
  f.add_clause({{1, true}});
  WcspInstance inst = cnf_to_count_instance(f);
  const auto& c = inst.constraints[0];
  CHECK(c.scope == std::vector<VarId>{1});
  CHECK(c.support.begin()->first == Tuple{0});
}

TEST_CASE("count encoding evaluates to 1 on models and 0 elsewhere") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CnfFormula f =
        gen_interval_cnf(testutil::interval_cnf_spec(seed, 8, 10, 3));
    WcspInstance inst = cnf_to_count_instance(f);
    for (const auto& a : all_assignments(f.used_variables(), 2)) {
      bool model = true;
      for (const Clause& c : f.clauses()) model = model && satisfies(c, a);
      CHECK(brute_w(inst, a, EvalMode::Sum) ==
            (model ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("count encoding preserves the hypergraph") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    CnfFormula f =
        gen_interval_cnf(testutil::interval_cnf_spec(seed, 9, 11, 4));
    CHECK(cnf_to_count_instance(f).hypergraph() == formula_hypergraph(f));
  }
}

TEST_CASE("count encoding rejects formulas with empty clauses") {
  CnfFormula f = parse_dimacs("p cnf 1 1\n0\n");
  CHECK_THROWS_AS(cnf_to_count_instance(f), InternalError);
}

TEST_CASE("max encoding doubles per satisfied clause") {
  CnfFormula f(1);
  f.add_clause({{1, true}});
  WcspInstance inst = cnf_to_max_instance(f);
  const auto& c = inst.constraints[0];
  CHECK(c.default_value == Rational(2));
  CHECK(c.support.begin()->first == Tuple{0});
  CHECK(c.support.begin()->second == Rational(1));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CnfFormula g =
        gen_interval_cnf(testutil::interval_cnf_spec(seed, 7, 9, 3));
    WcspInstance m = cnf_to_max_instance(g);
    for (const auto& a : all_assignments(g.used_variables(), 2)) {
      unsigned long sat = 0;
      for (const Clause& c2 : g.clauses()) sat += satisfies(c2, a);
      CHECK(brute_w(m, a, EvalMode::Max) == Rational::power(2, sat));
    }
  }
}

TEST_CASE("merging equal scopes multiplies pointwise") {
  WcspInstance inst;
  inst.domain_size = 2;
  inst.declared_var_count = 1;
  inst.constraints.emplace_back(0, std::vector<VarId>{1}, Rational(1),
                                std::map<Tuple, Rational>{{{0}, Rational(0)}});
  inst.constraints.emplace_back(1, std::vector<VarId>{1}, Rational(1),
                                std::map<Tuple, Rational>{{{1}, Rational(0)}});
  WcspInstance merged = merge_equal_scopes(inst);
  REQUIRE(merged.constraints.size() == 1);
  const auto& c = merged.constraints[0];
  CHECK(c.default_value == Rational(1));
  CHECK(c.support.at({0}) == Rational(0));
  CHECK(c.support.at({1}) == Rational(0));

  WcspInstance two;
  two.domain_size = 2;
  two.declared_var_count = 1;
  two.constraints.emplace_back(0, std::vector<VarId>{1}, Rational(2),
                               std::map<Tuple, Rational>{{{0}, Rational(1)}});
  two.constraints.emplace_back(1, std::vector<VarId>{1}, Rational(3),
                               std::map<Tuple, Rational>{{{0}, Rational(5)}});
  WcspInstance m2 = merge_equal_scopes(two);
  REQUIRE(m2.constraints.size() == 1);
  CHECK(m2.constraints[0].default_value == Rational(6));
  CHECK(m2.constraints[0].support.at({0}) == Rational(5));
}

TEST_CASE("merging preserves the value at every assignment") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenSpec spec = testutil::interval_wcsp_spec(seed, 6, 6, 3, 2 + seed % 2,
                                                5, 4);
    WcspInstance inst = gen_interval_wcsp(spec);
    WcspInstance merged = merge_equal_scopes(inst);
    CHECK(merged.table_size() <= inst.table_size());
    for (const auto& a :
         all_assignments(inst.variables(), inst.domain_size)) {
      CHECK(brute_w(inst, a, EvalMode::Sum) ==
            brute_w(merged, a, EvalMode::Sum));
      CHECK(brute_w(inst, a, EvalMode::Max) ==
            brute_w(merged, a, EvalMode::Max));
    }
  }
}

TEST_CASE("merging folds empty scopes into the scalar") {
  WcspInstance inst;
  inst.domain_size = 2;
  inst.constraints.emplace_back(0, std::vector<VarId>{}, Rational(3, 2),
                                std::map<Tuple, Rational>{});
  inst.constraints.emplace_back(1, std::vector<VarId>{1}, Rational(1),
                                std::map<Tuple, Rational>{});
  WcspInstance merged = merge_equal_scopes(inst);
  CHECK(merged.scalar == Rational(3, 2));
  CHECK(merged.constraints.size() == 1);
}

TEST_CASE("eval_total on tiny instances") {
  WcspInstance empty;
  CHECK(eval_total(empty, EvalMode::Sum) == Rational(1));
  CHECK(eval_total(empty, EvalMode::Max) == Rational(1));

  WcspInstance single;
  single.domain_size = 2;
  single.declared_var_count = 1;
  single.constraints.emplace_back(0, std::vector<VarId>{1}, Rational(1),
                                  std::map<Tuple, Rational>{{{1}, Rational(3)}});
  CHECK(eval_total(single, EvalMode::Sum) == Rational(4));
  CHECK(eval_total(single, EvalMode::Max) == Rational(3));

  WcspInstance zero;
  zero.domain_size = 2;
  zero.declared_var_count = 1;
  zero.constraints.emplace_back(0, std::vector<VarId>{1}, Rational(0),
                                std::map<Tuple, Rational>{});
  CHECK(eval_total(zero, EvalMode::Sum) == Rational(0));
}

TEST_CASE("wcspd format round-trips") {
  std::string text =
      "p wcspd 2 2 1\n"
      "con 1 1 default 1/1\n"
      "t 0 0/1\n";
  WcspInstance inst = parse_wcspd(text);
  CHECK(inst.declared_var_count == 2);
  CHECK(inst.domain_size == 2);
  REQUIRE(inst.constraints.size() == 1);
  CHECK(inst.constraints[0].scope == std::vector<VarId>{1});
  CHECK(inst.constraints[0].support.at({0}) == Rational(0));
  CHECK(serialize_wcspd(inst) == text);
  CHECK(parse_wcspd(serialize_wcspd(inst)) == inst);
}

TEST_CASE("wcspd round-trips generated instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    WcspInstance inst = gen_interval_wcsp(
        testutil::interval_wcsp_spec(seed, 8, 7, 3, 2 + seed % 3, 9, 6));
    std::string text = serialize_wcspd(inst);
    WcspInstance reparsed = parse_wcspd(text);
    CHECK(serialize_wcspd(reparsed) == text);
    // Values agree even where redundant support entries were dropped.
    for (const auto& a :
         all_assignments(inst.variables(), inst.domain_size)) {
      CHECK(brute_w(inst, a, EvalMode::Sum) ==
            brute_w(reparsed, a, EvalMode::Sum));
    }
  }
}

TEST_CASE("wcspd parse errors") {
  CHECK_THROWS_AS(parse_wcspd("con 1 1 default 1/1\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_wcspd("p wcspd 2 2 1\ncon 1 1 default 1/1\n"
                                   "t 5 1/1\n"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_wcspd("p wcspd 2 2 1\ncon 1 1 default 1/1\n"
                                   "t 0 1 1/1\n"),
                       doctest::Contains("trailing"), ParseError);
  CHECK_THROWS_WITH_AS(parse_wcspd("p wcspd 2 2 1\ncon 1 1 default x\n"),
                       doctest::Contains("rational"), ParseError);
  CHECK_THROWS_WITH_AS(parse_wcspd("p wcspd 2 2 1\ncon 1 1 default 1/1\n"
                                   "t 0 1/2\nt 0 1/3\n"),
                       doctest::Contains("duplicate support key"), ParseError);
  CHECK_THROWS_WITH_AS(parse_wcspd("p wcspd 2 2 1\ncon 1 3 default 1/1\n"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_AS(parse_wcspd("p wcspd 2 2 2\ncon 1 1 default 1/1\n"),
                  ParseError);
}

TEST_CASE("stored rationals are always reduced") {
  WcspInstance inst = parse_wcspd(
      "p wcspd 1 2 1\ncon 1 1 default 2/4\nt 0 6/8\n");
  CHECK(inst.constraints[0].default_value.str() == "1/2");
  CHECK(inst.constraints[0].support.at({0}).str() == "3/4");
}
