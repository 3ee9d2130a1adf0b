// Shared fixtures for the test-suite: random formulas, random ternary tensor
// trains and oracle helpers.

#pragma once

#include "ttkc/constructions.hpp"
#include "ttkc/kernels.hpp"
#include "ttkc/logic.hpp"
#include "ttkc/oracle.hpp"
#include "ttkc/tensor_train.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace ttkc::testing {

using rng_t = std::mt19937_64;

inline formula random_formula(rng_t &rng, std::size_t n, std::size_t leaves) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (leaves <= 1) {
    std::uniform_int_distribution<var_t> pick(1, static_cast<var_t>(n));
    formula v = formula::variable(pick(rng));
    return coin(rng) ? formula::negation(v) : v;
  }
  std::uniform_int_distribution<std::size_t> split(1, leaves - 1);
  std::size_t left = split(rng);
  static constexpr formula::kind ops[] = {
      formula::kind::conj, formula::kind::conj, formula::kind::disj,
      formula::kind::disj, formula::kind::exclusive, formula::kind::implies,
      formula::kind::iff};
  std::uniform_int_distribution<std::size_t> op(0, std::size(ops) - 1);
  formula f = formula::binary(ops[op(rng)], random_formula(rng, n, left),
                              random_formula(rng, n, leaves - left));
  return coin(rng) && coin(rng) ? formula::negation(f) : f;
}

/// Random strictly increasing nonempty subset of [1, n]
inline std::vector<var_t> random_map(rng_t &rng, std::size_t n) {
  std::vector<var_t> all(n);
  for (std::size_t j = 0; j < n; ++j)
    all[j] = static_cast<var_t>(j + 1);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, n);
  all.resize(count(rng));
  std::sort(all.begin(), all.end());
  return all;
}

/// Random ternary tensor train (not necessarily Boolean-valued)
inline tensor_train random_tt(rng_t &rng, std::size_t n,
                              std::vector<var_t> map,
                              std::size_t max_rank = 3) {
  std::uniform_int_distribution<std::size_t> rank(1, max_rank);
  std::uniform_int_distribution<int> entry(-1, 1);
  const std::size_t m = map.size();
  std::vector<std::size_t> r(m + 1, 1);
  for (std::size_t i = 1; i < m; ++i)
    r[i] = rank(rng);
  std::vector<ternary_core> cores;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int8_t> e(2 * r[i] * r[i + 1]);
    for (auto &x : e)
      x = static_cast<std::int8_t>(entry(rng));
    cores.emplace_back(r[i], r[i + 1], std::move(e));
  }
  return {n, std::move(cores), std::move(map)};
}

inline tensor_train random_tt(rng_t &rng, std::size_t n,
                              std::size_t max_rank = 3) {
  return random_tt(rng, n, random_map(rng, n), max_rank);
}

/// Random non-empty, non-complementary literal set over [1, n]
inline std::vector<literal> random_literals(rng_t &rng, std::size_t n,
                                            std::size_t max_len) {
  auto vars = random_map(rng, n);
  std::shuffle(vars.begin(), vars.end(), rng);
  vars.resize(std::min(vars.size(), max_len));
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<literal> out;
  for (var_t v : vars)
    out.push_back({v, coin(rng) == 1});
  return out;
}

/// Truth table of a Boolean-valued TT; fails the caller if not binary
inline oracle::truth_table table_of(const tensor_train &tt) {
  auto e = oracle::expand(tt);
  if (!e.binary)
    throw std::logic_error("tensor train is not Boolean-valued");
  return e.table;
}

inline tensor_train tt_of(const char *expr, std::size_t n) {
  return formula_tt(parse_formula(expr), n);
}

} // namespace ttkc::testing
