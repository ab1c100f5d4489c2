#include "betacount/wcsp.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "betacount/elim.hpp"
#include "betacount/errors.hpp"

namespace betacount {

WeightedConstraint::WeightedConstraint(ConstraintId cid,
                                       std::vector<VarId> vars, Rational def,
                                       std::map<Tuple, Rational> supp)
    : id(cid),
      scope(std::move(vars)),
      default_value(std::move(def)),
      support(std::move(supp)) {
  check(std::is_sorted(scope.begin(), scope.end()) &&
            std::adjacent_find(scope.begin(), scope.end()) == scope.end(),
        "WeightedConstraint: scope must be sorted and duplicate-free");
  for (const auto& [tuple, value] : support) {
    check(tuple.size() == scope.size(),
          "WeightedConstraint: support tuple arity mismatch");
  }
  original_scope = scope;
}

const Rational& WeightedConstraint::value_at(const Tuple& t) const {
  check(t.size() == scope.size(), "value_at: tuple arity mismatch");
  auto it = support.find(t);
  return it != support.end() ? it->second : default_value;
}

std::vector<VarId> WcspInstance::variables() const {
  std::vector<VarId> vars;
  for (const auto& c : constraints) {
    vars.insert(vars.end(), c.scope.begin(), c.scope.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::size_t WcspInstance::structural_size() const {
  std::size_t total = 0;
  for (const auto& c : constraints) total += c.scope.size();
  return total;
}

std::size_t WcspInstance::table_size() const {
  std::size_t total = 0;
  for (const auto& c : constraints) total += c.table_size();
  return total;
}

Hypergraph WcspInstance::hypergraph() const {
  std::vector<std::vector<VarId>> edges;
  for (const auto& c : constraints) {
    if (!c.scope.empty()) edges.push_back(c.scope);
  }
  return Hypergraph::from_edges(std::move(edges));
}

WcspInstance cnf_to_count_instance(const CnfFormula& f) {
  check(f.empty_clause_count() == 0,
        "cnf_to_count_instance: formula has empty clauses");
  WcspInstance instance;
  instance.domain_size = 2;
  instance.declared_var_count = f.declared_var_count();
  ConstraintId next = 0;
  for (const Clause& c : f.clauses()) {
    std::map<Tuple, Rational> supp;
    supp.emplace(c.falsifying_assignment(), Rational(0));
    instance.constraints.emplace_back(next++, c.variables(), Rational(1),
                                      std::move(supp));
  }
  return instance;
}

WcspInstance cnf_to_max_instance(const CnfFormula& f) {
  WcspInstance instance;
  instance.domain_size = 2;
  instance.declared_var_count = f.declared_var_count();
  ConstraintId next = 0;
  for (const Clause& c : f.clauses()) {
    std::map<Tuple, Rational> supp;
    supp.emplace(c.falsifying_assignment(), Rational(1));
    instance.constraints.emplace_back(next++, c.variables(), Rational(2),
                                      std::move(supp));
  }
  return instance;
}

WcspInstance merge_equal_scopes(const WcspInstance& instance) {
  WcspInstance merged;
  merged.domain_size = instance.domain_size;
  merged.declared_var_count = instance.declared_var_count;
  merged.scalar = instance.scalar;

  // Group constraints by scope, preserving first-appearance order.
  std::map<std::vector<VarId>, std::size_t> scope_slot;
  std::vector<std::vector<const WeightedConstraint*>> groups;
  for (const auto& c : instance.constraints) {
    auto [it, fresh] = scope_slot.emplace(c.scope, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(&c);
  }

  ConstraintId next = 0;
  for (const auto& group : groups) {
    Rational def(1);
    std::map<Tuple, Rational> keys;  // union of support keys
    for (const auto* c : group) {
      def *= c->default_value;
      for (const auto& [tuple, value] : c->support) {
        keys.emplace(tuple, Rational(1));
      }
    }
    std::map<Tuple, Rational> supp;
    for (auto& [tuple, unused] : keys) {
      Rational v(1);
      for (const auto* c : group) v *= c->value_at(tuple);
      supp.emplace(tuple, std::move(v));
    }
    const auto& scope = group.front()->scope;
    if (scope.empty()) {
      // Fold into the scalar: the single value is at the empty tuple.
      WeightedConstraint folded(0, {}, def, std::move(supp));
      merged.scalar *= folded.value_at(Tuple{});
      continue;
    }
    merged.constraints.emplace_back(next++, scope, std::move(def),
                                    std::move(supp));
  }
  check(merged.table_size() <= instance.table_size(),
        "merge_equal_scopes: size must not grow");
  return merged;
}

Rational eval_total(const WcspInstance& instance, EvalMode mode) {
  return solve(instance, mode);
}

namespace {

[[noreturn]] void wcspd_fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_uint(const std::string& token, unsigned long long* out) {
  if (token.empty()) return false;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  try {
    *out = std::stoull(token);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

}  // namespace

WcspInstance parse_wcspd(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  WcspInstance instance;
  unsigned long long num_vars = 0, domain = 0, num_constraints = 0;
  bool have_header = false;

  // Staged current constraint.
  bool in_constraint = false;
  std::vector<VarId> scope;
  Rational def;
  std::map<Tuple, Rational> supp;
  std::size_t constraints_read = 0;
  ConstraintId next = 0;

  auto flush_constraint = [&]() {
    if (!in_constraint) return;
    instance.constraints.emplace_back(next++, std::move(scope),
                                      std::move(def), std::move(supp));
    scope.clear();
    supp.clear();
    in_constraint = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;

    if (kw == "p") {
      if (have_header) wcspd_fail(line_no, "duplicate header");
      std::string fmt, v, d, m, extra;
      if (!(ls >> fmt >> v >> d >> m) || fmt != "wcspd" || (ls >> extra)) {
        wcspd_fail(line_no, "malformed header: expected "
                            "'p wcspd <vars> <domain> <constraints>'");
      }
      if (!parse_uint(v, &num_vars) || !parse_uint(d, &domain) ||
          !parse_uint(m, &num_constraints) || domain == 0) {
        wcspd_fail(line_no, "malformed header counts");
      }
      instance.domain_size = static_cast<std::uint32_t>(domain);
      instance.declared_var_count = static_cast<std::size_t>(num_vars);
      have_header = true;
      continue;
    }
    if (!have_header) wcspd_fail(line_no, "missing 'p wcspd' header");

    if (kw == "con") {
      flush_constraint();
      unsigned long long arity;
      std::string tok;
      if (!(ls >> tok) || !parse_uint(tok, &arity)) {
        wcspd_fail(line_no, "malformed arity");
      }
      scope.clear();
      for (unsigned long long i = 0; i < arity; ++i) {
        unsigned long long var;
        if (!(ls >> tok) || !parse_uint(tok, &var) || var == 0 ||
            var > num_vars) {
          wcspd_fail(line_no, "scope variable out of range");
        }
        scope.push_back(static_cast<VarId>(var));
      }
      std::sort(scope.begin(), scope.end());
      if (std::adjacent_find(scope.begin(), scope.end()) != scope.end()) {
        wcspd_fail(line_no, "duplicate variable in scope");
      }
      std::string kw_default, rat;
      if (!(ls >> kw_default >> rat) || kw_default != "default") {
        wcspd_fail(line_no, "expected 'default <num>/<den>'");
      }
      auto parsed = Rational::parse(rat);
      if (!parsed) wcspd_fail(line_no, "malformed rational '" + rat + "'");
      def = *parsed;
      supp.clear();
      if (ls >> rat) wcspd_fail(line_no, "trailing tokens");
      in_constraint = true;
      ++constraints_read;
      continue;
    }
    if (kw == "t") {
      if (!in_constraint) wcspd_fail(line_no, "'t' line outside a constraint");
      Tuple tuple;
      tuple.reserve(scope.size());
      std::string tok;
      for (std::size_t i = 0; i < scope.size(); ++i) {
        unsigned long long value;
        if (!(ls >> tok) || !parse_uint(tok, &value)) {
          wcspd_fail(line_no, "support tuple arity mismatch");
        }
        if (value >= instance.domain_size) {
          wcspd_fail(line_no, "domain value " + std::to_string(value) +
                                  " out of range");
        }
        tuple.push_back(static_cast<DomainValue>(value));
      }
      if (!(ls >> tok)) wcspd_fail(line_no, "missing value rational");
      auto parsed = Rational::parse(tok);
      if (!parsed) wcspd_fail(line_no, "malformed rational '" + tok + "'");
      if (ls >> tok) wcspd_fail(line_no, "trailing tokens");
      if (!supp.emplace(std::move(tuple), *parsed).second) {
        wcspd_fail(line_no, "duplicate support key");
      }
      continue;
    }
    wcspd_fail(line_no, "unknown directive '" + kw + "'");
  }
  flush_constraint();
  if (constraints_read != num_constraints) {
    wcspd_fail(line_no, "header declares " + std::to_string(num_constraints) +
                            " constraints but " +
                            std::to_string(constraints_read) + " were read");
  }
  return instance;
}

WcspInstance parse_wcspd(const std::string& text) {
  std::istringstream in(text);
  return parse_wcspd(in);
}

std::string serialize_wcspd(const WcspInstance& instance) {
  std::ostringstream out;
  std::size_t emitted = instance.constraints.size();
  bool emit_scalar = !instance.scalar.is_one();
  if (emit_scalar) ++emitted;
  out << "p wcspd " << instance.declared_var_count << ' '
      << instance.domain_size << ' ' << emitted << '\n';
  if (emit_scalar) {
    out << "con 0 default " << instance.scalar.str() << '\n';
  }
  for (const auto& c : instance.constraints) {
    out << "con " << c.scope.size();
    for (VarId v : c.scope) out << ' ' << v;
    out << " default " << c.default_value.str() << '\n';
    for (const auto& [tuple, value] : c.support) {
      if (value == c.default_value) continue;  // redundant entry
      out << 't';
      for (DomainValue d : tuple) out << ' ' << d;
      out << ' ' << value.str() << '\n';
    }
  }
  return out.str();
}

}  // namespace betacount
