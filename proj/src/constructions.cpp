#include "ttkc/constructions.hpp"

#include "ttkc/error.hpp"
#include "ttkc/kernels.hpp"

#include <string>

namespace ttkc {

tensor_train term_tt(std::span<const literal> t, std::size_t arity) {
  if (t.empty())
    throw error(errc::bad_literal, "a term needs at least one literal");
  check_literals(t, arity);
  std::vector<ternary_core> cores;
  std::vector<var_t> map;
  for (const auto &lit : sorted_literals(t)) {
    cores.push_back(lit.positive ? ternary_core::vector(0, 1)
                                 : ternary_core::vector(1, 0));
    map.push_back(lit.var);
  }
  return {arity, std::move(cores), std::move(map)};
}

tensor_train clause_tt(std::span<const literal> c, std::size_t arity) {
  if (c.empty())
    throw error(errc::bad_literal, "a clause needs at least one literal");
  std::vector<literal> negated(c.begin(), c.end());
  for (auto &lit : negated)
    lit.positive = !lit.positive;
  return not_c(term_tt(negated, arity));
}

tensor_train cnf_tt(std::span<const clause> clauses, std::size_t arity,
                    const fold_options &opts, fold_stats *stats) {
  if (clauses.empty())
    return constant_tt(arity, true);
  std::vector<tensor_train> parts;
  parts.reserve(clauses.size());
  for (const auto &c : clauses) {
    if (c.empty())
      return constant_tt(arity, false);
    parts.push_back(clause_tt(c, arity));
  }
  return and_c(parts, opts, stats);
}

tensor_train dnf_tt(std::span<const term> terms, std::size_t arity,
                    const fold_options &opts, fold_stats *stats) {
  if (terms.empty())
    return constant_tt(arity, false);
  std::vector<tensor_train> parts;
  parts.reserve(terms.size());
  for (const auto &t : terms) {
    if (t.empty())
      return constant_tt(arity, true);
    parts.push_back(term_tt(t, arity));
  }
  return or_c(parts, opts, stats);
}

namespace {

struct formula_compiler {
  std::size_t arity;
  const fold_options &opts;
  std::size_t nodes = 0;

  void guard(std::size_t rank) const {
    if (rank > opts.max_rank)
      throw rank_guard_error(nodes, rank, opts.max_rank);
  }

  tensor_train run(const formula &f) {
    ++nodes;
    using k = formula::kind;
    switch (f.op()) {
    case k::constant:
      return constant_tt(arity, f.value());
    case k::variable: {
      if (f.var() < 1 || f.var() > arity)
        throw error(errc::unknown_variable,
                    "x" + std::to_string(f.var()) + " outside arity " +
                        std::to_string(arity));
      literal lit{f.var(), true};
      return term_tt({&lit, 1}, arity);
    }
    case k::negation:
      return checked(not_c(run(f.operand())));
    default:
      break;
    }
    tensor_train a = run(f.lhs());
    tensor_train b = run(f.rhs());
    switch (f.op()) {
    case k::conj:
      guard(predicted_and_rank(a, b));
      return and_bc(a, b);
    case k::disj:
      guard(predicted_or_rank(a, b));
      return or_bc(a, b);
    case k::implies:
      guard(predicted_or_rank(not_c(a), b));
      return or_bc(not_c(a), b);
    case k::exclusive:
      return exclusive(a, b);
    case k::iff:
      return checked(not_c(exclusive(a, b)));
    default:
      break;
    }
    throw error(errc::parse_error, "unhandled formula node");
  }

  // a o (1 - b) + (1 - a) o b; the two products have disjoint supports.
  tensor_train exclusive(const tensor_train &a, const tensor_train &b) {
    tensor_train na = not_c(a), nb = not_c(b);
    guard(predicted_and_rank(a, nb) + predicted_and_rank(na, b));
    return tt_sum(and_bc(a, nb), and_bc(na, b));
  }

  tensor_train checked(tensor_train t) const {
    guard(t.rank());
    return t;
  }
};

} // namespace

tensor_train formula_tt(const formula &f, std::size_t arity,
                        const fold_options &opts) {
  formula_compiler c{arity, opts};
  return c.run(f);
}

tensor_train hwb_tt(std::size_t n) {
  if (n == 0)
    throw error(errc::malformed_tt, "HWB needs at least one variable");
  const std::size_t w = 2 * n;
  // Inner core for variable i (1-based): slice 0 = diag(I, I),
  // slice 1 = [[I_1, I'_i], [O, I_{n-1}]] where I_k shifts rows right by k
  // and I'_k is I_k with its rows reversed, so count r marks slot i-1-r.
  auto inner = [&](std::size_t i) {
    std::vector<std::int8_t> e(2 * w * w, 0);
    auto put = [&](std::size_t r, unsigned b, std::size_t c) {
      e[(r * 2 + b) * w + c] = 1;
    };
    for (std::size_t r = 0; r < w; ++r)
      put(r, 0, r);
    for (std::size_t r = 0; r < n; ++r) {
      put(r, 1, (r + 1) % n);
      put(r, 1, n + (n - 1 - r + i) % n);
      put(n + r, 1, n + (r + n - 1) % n);
    }
    return ternary_core(w, w, std::move(e));
  };

  std::vector<ternary_core> cores;
  std::vector<var_t> map;
  for (std::size_t i = 1; i <= n; ++i) {
    ternary_core core = inner(i);
    std::size_t left = core.left_rank(), right = core.right_rank();
    std::vector<std::int8_t> e(core.entries().begin(), core.entries().end());
    // Absorb the boundary vectors: row 0 on the left, column n on the right.
    if (i == 1) {
      std::vector<std::int8_t> row(2 * right);
      for (unsigned b = 0; b < 2; ++b)
        for (std::size_t c = 0; c < right; ++c)
          row[b * right + c] = core(0, b, c);
      e = std::move(row);
      left = 1;
    }
    if (i == n) {
      std::vector<std::int8_t> col(2 * left);
      for (std::size_t r = 0; r < left; ++r)
        for (unsigned b = 0; b < 2; ++b)
          col[r * 2 + b] = e[(r * 2 + b) * right + n];
      e = std::move(col);
      right = 1;
    }
    cores.emplace_back(left, right, std::move(e));
    map.push_back(static_cast<var_t>(i));
  }
  return {n, std::move(cores), std::move(map)};
}

bool hwb_value(std::span<const std::uint8_t> x) {
  std::size_t weight = 0;
  for (auto b : x)
    weight += b ? 1 : 0;
  return weight != 0 && x[weight - 1] != 0;
}

std::vector<clause> equality_cnf(std::size_t pairs) {
  std::vector<clause> out;
  for (std::size_t i = 1; i <= pairs; ++i) {
    auto x = static_cast<var_t>(i);
    auto y = static_cast<var_t>(pairs + i);
    out.push_back({{x, true}, {y, false}});
    out.push_back({{x, false}, {y, true}});
  }
  return out;
}

} // namespace ttkc
