#include "ttkc/ops.hpp"

#include "ttkc/constructions.hpp"
#include "ttkc/error.hpp"
#include "ttkc/kernels.hpp"

#include <algorithm>
#include <string>

namespace ttkc {
namespace {

// Number of models among the 2^m mode assignments
big_count mode_count(const tensor_train &f) {
  return tt_inner(f, ones_tt(f.arity(), f.map()));
}

// Bond ranks of `tt` once embedded into `vars`
std::vector<std::size_t> embedded_ranks(const tensor_train &tt,
                                        std::span<const var_t> vars) {
  std::vector<std::size_t> out{1};
  std::size_t next = 0, bond = 1;
  for (var_t v : vars) {
    if (next < tt.modes() && tt.map()[next] == v)
      bond = tt.core(next++).right_rank();
    out.push_back(bond);
  }
  return out;
}

std::vector<var_t> union_map(const tensor_train &f, const tensor_train &g) {
  if (f.arity() != g.arity())
    throw error(errc::arity_mismatch,
                "arities " + std::to_string(f.arity()) + " and " +
                    std::to_string(g.arity()));
  std::vector<var_t> vars;
  std::set_union(f.map().begin(), f.map().end(), g.map().begin(),
                 g.map().end(), std::back_inserter(vars));
  return vars;
}

void check_term(std::span<const literal> t, std::size_t arity) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i].var == t[j].var && t[i].positive != t[j].positive)
        throw error(errc::inconsistent_term,
                    "x" + std::to_string(t[i].var) +
                        " appears with both polarities");
  check_literals(t, arity);
}

template <class Step, class Predict>
tensor_train fold(std::span<const tensor_train> fs, const fold_options &opts,
                  fold_stats *stats, Step step, Predict predict) {
  if (fs.empty())
    throw error(errc::empty_list, "fold over an empty operand list");
  tensor_train acc = fs[0];
  if (stats)
    stats->ranks = {acc.rank()};
  if (acc.rank() > opts.max_rank)
    throw rank_guard_error(0, acc.rank(), opts.max_rank);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    std::size_t r = predict(acc, fs[i]);
    if (r > opts.max_rank)
      throw rank_guard_error(i, r, opts.max_rank);
    acc = step(acc, fs[i]);
    if (stats)
      stats->ranks.push_back(acc.rank());
  }
  return acc;
}

} // namespace

big_count ct(const tensor_train &f) {
  return mode_count(f) * pow2(f.arity() - f.modes());
}

rational weighted_ct(const tensor_train &f, const weight_spec &weights) {
  if (weights.size() != f.arity())
    throw error(errc::weight_arity_mismatch,
                "expected " + std::to_string(f.arity()) +
                    " weight pairs, got " + std::to_string(weights.size()));
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (sgn(weights[j].first) < 0 || sgn(weights[j].second) < 0)
      throw error(errc::weight_arity_mismatch,
                  "negative weight for x" + std::to_string(j + 1));
  std::vector<std::pair<rational, rational>> per_mode;
  per_mode.reserve(f.modes());
  for (var_t v : f.map())
    per_mode.push_back(weights[v - 1]);
  rational out = contract_weights(f, per_mode);
  for (std::size_t j = 1; j <= f.arity(); ++j)
    if (!f.mode_of(static_cast<var_t>(j)))
      out *= weights[j - 1].first + weights[j - 1].second;
  return out;
}

bool co(const tensor_train &f) { return mode_count(f) != 0; }

bool va(const tensor_train &f) { return mode_count(f) == pow2(f.modes()); }

bool eq(const tensor_train &f, const tensor_train &g) {
  auto [a, b] = align(f, g);
  auto both = tt_inner(a, b);
  return both == mode_count(a) && both == mode_count(b);
}

bool se(const tensor_train &f, const tensor_train &g) {
  auto [a, b] = align(f, g);
  return tt_inner(a, b) == mode_count(a);
}

bool ce(const tensor_train &f, std::span<const literal> c) {
  check_literals(c, f.arity());
  if (c.empty())
    return !co(f);
  return se(f, clause_tt(c, f.arity()));
}

bool im(const tensor_train &f, std::span<const literal> t) {
  check_literals(t, f.arity());
  if (t.empty())
    return va(f);
  return se(term_tt(t, f.arity()), f);
}

tensor_train and_bc(const tensor_train &f, const tensor_train &g) {
  auto [a, b] = align(f, g);
  return tt_hadamard(a, b);
}

tensor_train not_c(const tensor_train &f) {
  return tt_sum(ones_tt(f.arity(), f.map()), negate_scalar(f));
}

tensor_train or_bc(const tensor_train &f, const tensor_train &g) {
  auto [a, b] = align(f, g);
  return not_c(tt_hadamard(not_c(a), not_c(b)));
}

tensor_train cd(const tensor_train &f, std::span<const literal> t) {
  check_term(t, f.arity());
  std::vector<ternary_core> cores = f.cores();
  for (const auto &lit : t) {
    auto mode = f.mode_of(lit.var);
    if (!mode)
      continue;
    const auto &core = cores[*mode];
    std::vector<std::int8_t> e(core.entries().begin(), core.entries().end());
    const unsigned src = lit.positive ? 1 : 0;
    const unsigned dst = 1 - src;
    for (std::size_t l = 0; l < core.left_rank(); ++l)
      for (std::size_t r = 0; r < core.right_rank(); ++r)
        e[core.index(l, dst, r)] = e[core.index(l, src, r)];
    cores[*mode] = ternary_core(core.left_rank(), core.right_rank(),
                                std::move(e));
  }
  return {f.arity(), std::move(cores), f.map()};
}

tensor_train sfo(const tensor_train &f, var_t v) {
  if (v < 1 || v > f.arity())
    throw error(errc::unknown_variable,
                "x" + std::to_string(v) + " outside arity " +
                    std::to_string(f.arity()));
  if (!f.mode_of(v))
    return f;
  literal pos{v, true}, neg{v, false};
  return or_bc(cd(f, {&pos, 1}), cd(f, {&neg, 1}));
}

std::size_t predicted_and_rank(const tensor_train &f, const tensor_train &g) {
  auto vars = union_map(f, g);
  auto ra = embedded_ranks(f, vars);
  auto rb = embedded_ranks(g, vars);
  std::size_t r = 1;
  for (std::size_t k = 0; k < ra.size(); ++k)
    r = std::max(r, ra[k] * rb[k]);
  return r;
}

std::size_t predicted_or_rank(const tensor_train &f, const tensor_train &g) {
  auto vars = union_map(f, g);
  auto ra = embedded_ranks(f, vars);
  auto rb = embedded_ranks(g, vars);
  std::size_t r = 1;
  for (std::size_t k = 1; k + 1 < ra.size(); ++k)
    r = std::max(r, (ra[k] + 1) * (rb[k] + 1) + 1);
  return r;
}

tensor_train and_c(std::span<const tensor_train> fs, const fold_options &opts,
                   fold_stats *stats) {
  return fold(fs, opts, stats, and_bc, predicted_and_rank);
}

tensor_train or_c(std::span<const tensor_train> fs, const fold_options &opts,
                  fold_stats *stats) {
  return fold(fs, opts, stats, or_bc, predicted_or_rank);
}

tensor_train fo(const tensor_train &f, std::span<const var_t> vars,
                const fold_options &opts, fold_stats *stats) {
  tensor_train acc = f;
  if (stats)
    stats->ranks = {acc.rank()};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (acc.mode_of(vars[i]) && acc.modes() > 1) {
      std::size_t r = (acc.rank() + 1) * (acc.rank() + 1) + 1;
      if (r > opts.max_rank)
        throw rank_guard_error(i, r, opts.max_rank);
    }
    acc = sfo(acc, vars[i]);
    if (stats)
      stats->ranks.push_back(acc.rank());
  }
  return acc;
}

big_count cube_size(const cube &c) {
  return pow2(static_cast<unsigned long>(
      std::count_if(c.begin(), c.end(), [](std::int8_t v) { return v < 0; })));
}

model_enumerator::model_enumerator(tensor_train f)
    : _arity(f.arity()), _map(f.map()), _all(pow2(f.arity())) {
  _stack.push_back({std::move(f), 0, cube(_arity, -1)});
}

std::optional<cube> model_enumerator::next() {
  while (!_stack.empty()) {
    frame top = std::move(_stack.back());
    _stack.pop_back();
    big_count n = ct(top.g);
    if (n == 0)
      continue;
    if (n == _all)
      return std::move(top.partial);
    // Not constant, so some mapped variable is still free.
    const var_t v = _map[top.depth];
    literal hi{v, true}, lo{v, false};
    cube with_hi = top.partial, with_lo = std::move(top.partial);
    with_hi[v - 1] = 1;
    with_lo[v - 1] = 0;
    _stack.push_back({cd(top.g, {&hi, 1}), top.depth + 1, std::move(with_hi)});
    _stack.push_back({cd(top.g, {&lo, 1}), top.depth + 1, std::move(with_lo)});
  }
  return std::nullopt;
}

std::vector<cube> me(const tensor_train &f, std::optional<big_count> limit) {
  std::vector<cube> out;
  big_count covered = 0;
  model_enumerator it(f);
  while (!limit || covered < *limit) {
    auto c = it.next();
    if (!c)
      break;
    covered += cube_size(*c);
    out.push_back(std::move(*c));
  }
  return out;
}

} // namespace ttkc
