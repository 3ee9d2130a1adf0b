// ttkc: compile Boolean functions to tensor trains and query them.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 rank guard, 3 verification
// failure.

#include "ttkc/constructions.hpp"
#include "ttkc/error.hpp"
#include "ttkc/io.hpp"
#include "ttkc/kernels.hpp"
#include "ttkc/obdd.hpp"
#include "ttkc/ops.hpp"
#include "ttkc/oracle.hpp"
#include "ttkc/stats.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace ttkc;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_rank_guard = 2;
constexpr int exit_verify = 3;

struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_tt(const tensor_train &tt, const std::string &out) {
  if (out.empty() || out == "-")
    write_tt(std::cout, tt);
  else
    save_tt(out, tt);
}

/// Space-separated DIMACS literals, e.g. "1 -3"
std::vector<literal> parse_literals(const std::string &text) {
  std::istringstream in(text);
  std::vector<literal> out;
  std::string w;
  while (in >> w) {
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(w, &used);
      if (used != w.size())
        throw std::invalid_argument(w);
    } catch (const std::exception &) {
      throw error(errc::bad_literal, "cannot parse literal '" + w + "'");
    }
    if (v == 0)
      throw error(errc::bad_literal, "literal 0 is not allowed");
    out.push_back(from_dimacs(v));
  }
  return out;
}

std::string cube_string(const cube &c) {
  std::string s;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j)
      s += ' ';
    s += c[j] < 0 ? '-' : char('0' + c[j]);
  }
  return s;
}

/// rename[v-1] = new index of x_v, where order[k] becomes x_{k+1}
std::vector<var_t> renaming(const std::vector<var_t> &order) {
  std::vector<var_t> rename(order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rename[order[k] - 1] = static_cast<var_t>(k + 1);
  return rename;
}

/// Relabels a diagram so that order[k] becomes x_{k+1}
obdd to_natural(const obdd &b) {
  if (b.natural_order())
    return b;
  auto rename = renaming(b.order());
  std::vector<bdd_node> nodes = b.nodes();
  for (std::size_t id = 2; id < nodes.size(); ++id)
    nodes[id].var = rename[nodes[id].var - 1];
  return obdd(b.arity(), std::move(nodes), b.root());
}

formula cnf_formula(const std::vector<clause> &clauses) {
  formula all = formula::constant(true);
  bool first = true;
  for (const auto &c : clauses) {
    formula d = formula::constant(false);
    for (std::size_t i = 0; i < c.size(); ++i) {
      formula lit = formula::variable(c[i].var);
      if (!c[i].positive)
        lit = formula::negation(lit);
      d = i ? formula::binary(formula::kind::disj, d, lit) : lit;
    }
    all = first ? d : formula::binary(formula::kind::conj, all, d);
    first = false;
  }
  return all;
}

struct compile_args {
  std::string cnf_path, formula_text, obdd_path, order_path, out, bdd_out;
  std::size_t hwb = 0, arity = 0, max_rank = 4096;
  std::string via = "direct";
};

int run_compile(const compile_args &a, CLI::App &cmd) {
  const int sources = !a.cnf_path.empty() + !a.formula_text.empty() +
                      !a.obdd_path.empty() + (cmd.count("--hwb") > 0);
  if (sources != 1)
    throw CLI::ValidationError(
        "compile needs exactly one of --cnf, --formula, --obdd, --hwb");
  fold_options opts{a.max_rank};

  if (cmd.count("--hwb")) {
    if (!a.order_path.empty())
      throw CLI::ValidationError("--hwb uses the natural order only");
    if (a.via == "obdd") {
      auto table = oracle::tabulate(a.hwb, hwb_value);
      obdd b = from_truth_table(a.hwb, table.bits);
      if (!a.bdd_out.empty())
        save_bdd(a.bdd_out, b);
      emit_tt(compile_obdd(b), a.out);
    } else {
      emit_tt(hwb_tt(a.hwb), a.out);
    }
    return 0;
  }

  if (!a.obdd_path.empty()) {
    obdd b = load_bdd(a.obdd_path);
    if (!a.order_path.empty() &&
        load_order(a.order_path, b.arity()) != b.order())
      throw error(errc::order_mismatch, "--order differs from diagram order");
    if (!b.natural_order() && a.order_path.empty())
      throw error(errc::order_mismatch,
                  "diagram order is not natural; pass it with --order to "
                  "relabel x_order[k] as x_k");
    emit_tt(compile_obdd(to_natural(b)), a.out);
    return 0;
  }

  std::size_t n = 0;
  formula f = formula::constant(true);
  std::vector<clause> clauses;
  if (!a.cnf_path.empty()) {
    cnf c = load_dimacs(a.cnf_path);
    n = c.arity;
    clauses = std::move(c.clauses);
  } else {
    f = parse_formula(a.formula_text);
    n = std::max<std::size_t>(a.arity, std::max<std::size_t>(f.max_var(), 1));
  }
  if (n == 0)
    throw error(errc::malformed_tt, "arity must be at least 1");
  std::vector<var_t> order;
  if (!a.order_path.empty())
    order = load_order(a.order_path, n);

  if (a.via == "obdd") {
    // The diagram keeps the input's variable names; the TT is relabeled.
    obdd b = build_from_formula(a.cnf_path.empty() ? f : cnf_formula(clauses),
                                n, order);
    if (!a.bdd_out.empty())
      save_bdd(a.bdd_out, b);
    emit_tt(compile_obdd(to_natural(b)), a.out);
    return 0;
  }
  if (!order.empty()) {
    auto rename = renaming(order);
    for (auto &c : clauses)
      for (auto &lit : c)
        lit.var = rename[lit.var - 1];
    f = f.relabel(rename);
  }
  if (!a.cnf_path.empty()) {
    emit_tt(cnf_tt(clauses, n, opts), a.out);
  } else {
    emit_tt(formula_tt(f, n, opts), a.out);
  }
  return 0;
}

void require_files(const std::vector<std::string> &files, std::size_t count,
                   const std::string &name) {
  if (files.size() != count)
    throw CLI::ValidationError(name + " takes " + std::to_string(count) +
                               " file(s)");
}

struct query_args {
  std::string name, weights, clause_text, term_text;
  std::vector<std::string> files;
};

int run_query(const query_args &a) {
  const auto &q = a.name;
  if (q == "eq" || q == "se") {
    require_files(a.files, 2, q);
    auto f = load_tt(a.files[0]);
    auto g = load_tt(a.files[1]);
    std::cout << ((q == "eq" ? eq(f, g) : se(f, g)) ? "true" : "false")
              << '\n';
    return 0;
  }
  require_files(a.files, 1, q);
  auto f = load_tt(a.files[0]);
  if (q == "co")
    std::cout << (co(f) ? "true" : "false") << '\n';
  else if (q == "va")
    std::cout << (va(f) ? "true" : "false") << '\n';
  else if (q == "ct")
    std::cout << ct(f) << '\n';
  else if (q == "wct") {
    if (a.weights.empty())
      throw CLI::ValidationError("wct needs --weights");
    std::cout << weighted_ct(f, load_weights(a.weights, f.arity())) << '\n';
  } else if (q == "ce") {
    std::cout << (ce(f, parse_literals(a.clause_text)) ? "true" : "false")
              << '\n';
  } else if (q == "im") {
    std::cout << (im(f, parse_literals(a.term_text)) ? "true" : "false")
              << '\n';
  }
  return 0;
}

struct transform_args {
  std::string name, term_text, out;
  std::vector<std::string> files;
  var_t var = 0;
  std::size_t max_rank = 4096;
};

int run_transform(const transform_args &a) {
  const auto &t = a.name;
  if (t == "and" || t == "or") {
    if (a.files.empty())
      throw CLI::ValidationError(t + " needs at least one file");
    std::vector<tensor_train> fs;
    for (const auto &p : a.files)
      fs.push_back(load_tt(p));
    fold_options opts{a.max_rank};
    emit_tt(t == "and" ? and_c(fs, opts) : or_c(fs, opts), a.out);
    return 0;
  }
  require_files(a.files, 1, t);
  auto f = load_tt(a.files[0]);
  if (t == "not")
    emit_tt(not_c(f), a.out);
  else if (t == "cd")
    emit_tt(cd(f, parse_literals(a.term_text)), a.out);
  else if (t == "sfo")
    emit_tt(sfo(f, a.var), a.out);
  return 0;
}

int run_verify(const std::string &file, const std::string &formula_text,
               const std::string &cnf_path) {
  auto f = load_tt(file);
  if (!is_ternary(f))
    throw verification_failure("core entries outside {-1, 0, 1}");
  auto e = oracle::expand(f);
  if (!e.binary)
    throw verification_failure("some assignment evaluates outside {0, 1}");
  if (ct(f) != oracle::ct(e.table))
    throw verification_failure("model count disagrees with expansion");
  std::optional<oracle::truth_table> want;
  if (!formula_text.empty())
    want = oracle::tabulate(parse_formula(formula_text), f.arity());
  if (!cnf_path.empty()) {
    cnf c = load_dimacs(cnf_path);
    if (c.arity != f.arity())
      throw error(errc::arity_mismatch, "CNF arity differs from TT arity");
    want = oracle::tabulate(cnf_formula(c.clauses), f.arity());
  }
  if (want && !oracle::eq(*want, e.table))
    throw verification_failure("truth table differs from reference");
  std::cout << "ok\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Tensor-train knowledge compiler"};
  app.require_subcommand(1);

  compile_args ca;
  auto *compile = app.add_subcommand("compile", "Compile an input to a TT");
  compile->add_option("--cnf", ca.cnf_path, "DIMACS CNF file");
  compile->add_option("--formula", ca.formula_text, "Boolean expression");
  compile->add_option("--obdd", ca.obdd_path, "BDD file");
  compile->add_option("--hwb", ca.hwb, "Hidden weighted bit of n variables")
      ->check(CLI::PositiveNumber);
  compile->add_option("--arity", ca.arity, "Arity for --formula");
  compile->add_option("--order", ca.order_path,
                      "Permutation file; its k-th entry becomes x_k");
  compile->add_option("--via", ca.via, "Pipeline")
      ->check(CLI::IsMember({"direct", "obdd"}));
  compile->add_option("--max-rank", ca.max_rank, "Rank guard")
      ->check(CLI::PositiveNumber);
  compile->add_option("-o,--output", ca.out, "Output .tt (default stdout)");
  compile->add_option("--bdd-out", ca.bdd_out,
                      "Also write the intermediate BDD");

  query_args qa;
  auto *query = app.add_subcommand("query", "Answer a query");
  query->add_option("name", qa.name)
      ->required()
      ->check(CLI::IsMember({"co", "va", "ct", "wct", "ce", "im", "eq", "se"}));
  query->add_option("files", qa.files)->required();
  query->add_option("--weights", qa.weights, "Weights file for wct");
  query->add_option("--clause", qa.clause_text, "Clause for ce, e.g. \"1 -2\"");
  query->add_option("--term", qa.term_text, "Term for im, e.g. \"1 -2\"");

  transform_args ta;
  auto *transform = app.add_subcommand("transform", "Apply a transformation");
  transform->add_option("name", ta.name)
      ->required()
      ->check(CLI::IsMember({"and", "or", "not", "cd", "sfo"}));
  transform->add_option("files", ta.files)->required();
  transform->add_option("--term", ta.term_text, "Term for cd");
  transform->add_option("--var", ta.var, "Variable for sfo");
  transform->add_option("--max-rank", ta.max_rank, "Rank guard for and/or")
      ->check(CLI::PositiveNumber);
  transform->add_option("-o,--output", ta.out, "Output .tt (default stdout)");

  std::string models_file;
  std::optional<std::string> limit_text;
  bool expand_models = false;
  auto *models = app.add_subcommand("models", "Enumerate models as cubes");
  models->add_option("file", models_file)->required();
  models->add_option("--limit", limit_text, "Stop after this many models");
  models->add_flag("--expand", expand_models, "Print full assignments");

  std::string stats_file;
  auto *stats = app.add_subcommand("stats", "Print size and rank summary");
  stats->add_option("file", stats_file)->required();

  std::string rank_file;
  std::size_t split = 0;
  auto *rank_lb = app.add_subcommand("rank-lb", "Unfolding-matrix rank");
  rank_lb->add_option("file", rank_file)->required();
  rank_lb->add_option("--split", split, "Cores on the row side")->required();

  std::string verify_file, verify_formula, verify_cnf;
  auto *verify = app.add_subcommand("verify", "Cross-check against the oracle");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--formula", verify_formula, "Reference expression");
  verify->add_option("--cnf", verify_cnf, "Reference DIMACS CNF");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*compile)
      return run_compile(ca, *compile);
    if (*query)
      return run_query(qa);
    if (*transform)
      return run_transform(ta);
    if (*models) {
      auto f = load_tt(models_file);
      std::optional<big_count> limit;
      if (limit_text)
        limit = big_count(*limit_text);
      big_count printed = 0;
      for (const auto &c : me(f, limit)) {
        if (!expand_models) {
          std::cout << cube_string(c) << '\n';
          continue;
        }
        for_each_assignment(c, [&](std::span<const std::uint8_t> bits) {
          if (limit && printed >= *limit)
            return;
          ++printed;
          std::cout << cube_string(cube(bits.begin(), bits.end())) << '\n';
        });
      }
      return 0;
    }
    if (*stats) {
      std::cout << format_stats(make_stats(load_tt(stats_file)));
      return 0;
    }
    if (*rank_lb) {
      std::cout << oracle::unfolding_rank(load_tt(rank_file), split) << '\n';
      return 0;
    }
    if (*verify)
      return run_verify(verify_file, verify_formula, verify_cnf);
  } catch (const rank_guard_error &e) {
    std::cerr << "ttkc: " << e.what() << '\n';
    return exit_rank_guard;
  } catch (const verification_failure &e) {
    std::cerr << "ttkc: verification failed: " << e.what() << '\n';
    return exit_verify;
  } catch (const CLI::Error &e) {
    std::cerr << "ttkc: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "ttkc: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
