#include "betacount/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "betacount/elim.hpp"
#include "betacount/errors.hpp"
#include "betacount/formula.hpp"
#include "betacount/gen.hpp"
#include "betacount/oracle.hpp"
#include "betacount/wcsp.hpp"

namespace betacount {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotAcyclic = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string witness_line(const std::vector<VarId>& vars) {
  std::ostringstream os;
  os << "not beta-acyclic; residual variables:";
  for (VarId v : vars) os << ' ' << v;
  return os.str();
}

struct FileResult {
  int code = kExitOk;
  std::string output;       // goes to stdout
  std::string diagnostics;  // goes to stderr
};

// Runs `body` under the common error-to-exit-code mapping.
template <typename Body>
FileResult guarded(Body&& body) {
  FileResult r;
  std::ostringstream out, err;
  try {
    body(out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    r.code = kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    r.code = kExitInput;
  } catch (const NotBetaAcyclicError& e) {
    err << witness_line(e.residual_vertices()) << '\n';
    r.code = kExitNotAcyclic;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    r.code = kExitInternal;
  }
  r.output = out.str();
  r.diagnostics = err.str();
  return r;
}

CnfFormula parse_formula_text(const std::string& text, std::ostream& err) {
  CnfFormula f = parse_dimacs(text);
  for (const auto& w : f.warnings()) err << "warning: " << w << '\n';
  return f;
}

FileResult run_count(const std::string& text, bool mcc) {
  return guarded([&](std::ostream& out, std::ostream& err) {
    CnfFormula f = parse_formula_text(text, err);
    mpz_class count = 0;
    if (f.empty_clause_count() == 0) {
      Rational w = solve(cnf_to_count_instance(f), EvalMode::Sum);
      check(w.den() == 1, "model count must be an integer");
      count = w.num();
      // Each declared-but-unused variable doubles the count.
      mpz_mul_2exp(count.get_mpz_t(), count.get_mpz_t(),
                   isolated_variables(f));
    }
    if (mcc) out << "c s type mc\n";
    if (mcc) out << "s mc " << count.get_str() << '\n';
    if (!mcc) out << count.get_str() << '\n';
  });
}

FileResult run_maxsat(const std::string& text) {
  return guarded([&](std::ostream& out, std::ostream& err) {
    CnfFormula f = parse_formula_text(text, err);
    Rational m = solve(cnf_to_max_instance(f), EvalMode::Max);
    unsigned long exponent = 0;
    check(m.is_power_of_two(&exponent),
          "maximization result must be a power of two");
    out << exponent + f.tautology_count() << '\n';
  });
}

FileResult run_csp(const std::string& text, EvalMode mode) {
  return guarded([&](std::ostream& out, std::ostream&) {
    WcspInstance instance = parse_wcspd(text);
    out << eval_total(instance, mode).str() << '\n';
  });
}

FileResult run_order(const std::string& text) {
  return guarded([&](std::ostream& out, std::ostream& err) {
    CnfFormula f = parse_formula_text(text, err);
    auto result = beta_elimination_order(formula_hypergraph(f));
    if (auto* blocked = std::get_if<NotBetaAcyclic>(&result)) {
      throw NotBetaAcyclicError(blocked->residual_vertices);
    }
    for (VarId v : std::get<EliminationOrder>(result).order) {
      out << v << '\n';
    }
  });
}

FileResult run_check(const std::string& text) {
  return guarded([&](std::ostream& out, std::ostream& err) {
    CnfFormula f = parse_formula_text(text, err);
    auto result = beta_elimination_order(formula_hypergraph(f));
    if (auto* blocked = std::get_if<NotBetaAcyclic>(&result)) {
      out << "beta-acyclic: no\n";
      out << "witness:";
      for (VarId v : blocked->residual_vertices) out << ' ' << v;
      out << '\n';
    } else {
      out << "beta-acyclic: yes\n";
    }
  });
}

// Processes the files with up to `jobs` worker threads; output is printed in
// input order, prefixed with the file name when there are several files.
int run_over_files(const std::vector<std::string>& files, unsigned jobs,
                   std::istream& in, std::ostream& out, std::ostream& err,
                   const std::function<FileResult(const std::string&)>& body) {
  std::vector<FileResult> results(files.size());

  // Reading must stay on this thread (stdin), only solving is parallel.
  std::vector<std::string> texts(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    try {
      texts[i] = read_input(files[i], in);
    } catch (const ParseError& e) {
      results[i].code = kExitInput;
      results[i].diagnostics = "error: " + std::string(e.what()) + '\n';
    }
  }

  std::size_t cursor = 0;
  std::mutex lock;
  auto worker = [&]() {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (cursor == files.size()) return;
        i = cursor++;
      }
      if (results[i].code == kExitOk) results[i] = body(texts[i]);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, files.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int worst = kExitOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const bool prefix = files.size() > 1;
    std::istringstream lines(results[i].output);
    std::string line;
    while (std::getline(lines, line)) {
      if (prefix) out << files[i] << ": ";
      out << line << '\n';
    }
    std::istringstream diags(results[i].diagnostics);
    while (std::getline(diags, line)) {
      if (prefix) err << files[i] << ": ";
      err << line << '\n';
    }
    worst = std::max(worst, results[i].code);
  }
  return worst;
}

int run_gen(const GenSpec& spec, std::ostream& out, std::ostream& err) {
  FileResult r = guarded([&](std::ostream& o, std::ostream&) {
    switch (spec.kind) {
      case GenSpec::Kind::IntervalCnf:
        o << "c gen interval --vars " << spec.var_count << " --clauses "
          << spec.count << " --min-arity " << spec.min_arity << " --max-arity "
          << spec.max_arity << " --seed " << spec.seed << '\n';
        o << serialize_dimacs(gen_interval_cnf(spec));
        break;
      case GenSpec::Kind::IntervalWcsp:
        o << "# gen interval-wcsp --vars " << spec.var_count
          << " --constraints " << spec.count << " --min-arity "
          << spec.min_arity << " --max-arity " << spec.max_arity
          << " --domain " << spec.domain_size << " --max-num "
          << spec.max_weight_num << " --max-den " << spec.max_weight_den
          << " --seed " << spec.seed << '\n';
        o << serialize_wcspd(gen_interval_wcsp(spec));
        break;
      case GenSpec::Kind::HardPs:
        o << "c gen hardps --base-vertices " << spec.base_vertices;
        if (spec.regular_degree != 0) {
          o << " --degree " << spec.regular_degree;
        } else {
          o << " --edge-prob " << spec.edge_prob;
        }
        o << " --seed " << spec.seed << '\n';
        o << serialize_dimacs(gen_hardps(spec));
        break;
    }
  });
  out << r.output;
  err << r.diagnostics;
  return r.code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"exact counting and optimization for beta-acyclic CNF and "
               "weighted constraint instances"};
  app.require_subcommand(1);

  std::vector<std::string> files{"-"};
  unsigned jobs = 1;
  bool mcc = false;
  std::string csp_mode = "sum";

  auto* count = app.add_subcommand("count", "count models of a DIMACS CNF");
  count->add_option("files", files, "input files ('-' for stdin)");
  count->add_flag("--mcc", mcc, "model-counting-competition output format");
  count->add_option("--jobs", jobs, "worker threads for multiple files");

  auto* maxsat = app.add_subcommand(
      "maxsat", "maximum number of simultaneously satisfiable clauses");
  maxsat->add_option("files", files, "input files ('-' for stdin)");
  maxsat->add_option("--jobs", jobs, "worker threads for multiple files");

  auto* csp = app.add_subcommand(
      "csp", "partition function or maximum of a .wcspd instance");
  csp->add_option("files", files, "input files ('-' for stdin)");
  csp->add_option("--mode", csp_mode, "sum or max")
      ->check(CLI::IsMember({"sum", "max"}));
  csp->add_option("--jobs", jobs, "worker threads for multiple files");

  auto* order = app.add_subcommand(
      "order", "print a beta-elimination order of the formula hypergraph");
  order->add_option("files", files, "input file ('-' for stdin)");

  auto* chk = app.add_subcommand("check", "report beta-acyclicity");
  chk->add_option("files", files, "input file ('-' for stdin)");

  GenSpec spec;
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto add_interval_options = [&](CLI::App* sub, const char* what) {
    sub->add_option("--vars", spec.var_count, "number of variables");
    sub->add_option(what, spec.count);
    sub->add_option("--min-arity", spec.min_arity, "minimum scope size");
    sub->add_option("--max-arity", spec.max_arity, "maximum scope size");
    sub->add_option("--seed", spec.seed, "random seed");
  };
  auto* gi = gen->add_subcommand("interval",
                                 "random beta-acyclic CNF (laminar scopes)");
  add_interval_options(gi, "--clauses");
  auto* gw = gen->add_subcommand(
      "interval-wcsp", "random beta-acyclic weighted instance");
  add_interval_options(gw, "--constraints");
  gw->add_option("--domain", spec.domain_size, "domain size");
  gw->add_option("--max-num", spec.max_weight_num, "largest weight numerator");
  gw->add_option("--max-den", spec.max_weight_den,
                 "largest weight denominator");
  auto* gh = gen->add_subcommand("hardps",
                                 "monotone stress family from a base graph");
  gh->add_option("--base-vertices", spec.base_vertices, "base graph size");
  gh->add_option("--degree", spec.regular_degree,
                 "random regular base of this degree");
  gh->add_option("--edge-prob", spec.edge_prob,
                 "Erdos-Renyi edge probability");
  gh->add_option("--seed", spec.seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (count->parsed()) {
    return run_over_files(files, jobs, in, out, err,
                          [&](const std::string& t) { return run_count(t, mcc); });
  }
  if (maxsat->parsed()) {
    return run_over_files(files, jobs, in, out, err, run_maxsat);
  }
  if (csp->parsed()) {
    EvalMode mode = csp_mode == "max" ? EvalMode::Max : EvalMode::Sum;
    return run_over_files(files, jobs, in, out, err, [&](const std::string& t) {
      return run_csp(t, mode);
    });
  }
  auto single = [&](const std::function<FileResult(const std::string&)>& body) {
    if (files.size() != 1) {
      err << "error: exactly one input file expected\n";
      return kExitInput;
    }
    return run_over_files(files, 1, in, out, err, body);
  };
  if (order->parsed()) return single(run_order);
  if (chk->parsed()) return single(run_check);
  if (gen->parsed()) {
    if (gi->parsed()) spec.kind = GenSpec::Kind::IntervalCnf;
    if (gw->parsed()) spec.kind = GenSpec::Kind::IntervalWcsp;
    if (gh->parsed()) spec.kind = GenSpec::Kind::HardPs;
    return run_gen(spec, out, err);
  }
  err << "error: no subcommand\n";
  return kExitInput;
}

}  // namespace betacount
