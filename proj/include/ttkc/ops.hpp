/// @file  ops.hpp
/// @brief Queries and transformations over tensor-train Boolean functions
///
/// Every binary operation first aligns its operands onto the union of their
/// variable maps, so operands only need to share an arity. Tensor trains
/// always follow the natural variable order x_1 < ... < x_n.

#pragma once

#include "ttkc/logic.hpp"
#include "ttkc/numeric.hpp"
#include "ttkc/tensor_train.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ttkc {

/// Per-variable (negative, positive) literal weights, index j-1 for x_j
using weight_spec = std::vector<std::pair<rational, rational>>;

/// Model count over all n variables
big_count ct(const tensor_train &f);
/// Sum over models of prod_j (x_j ? w_j : w̄_j); weights must be >= 0
rational weighted_ct(const tensor_train &f, const weight_spec &weights);

/// Consistency: f has a model
bool co(const tensor_train &f);
/// Validity: every assignment is a model
bool va(const tensor_train &f);
/// Equivalence
bool eq(const tensor_train &f, const tensor_train &g);
/// Sentential entailment f |= g
bool se(const tensor_train &f, const tensor_train &g);
/// Clausal entailment f |= c; the empty clause is entailed iff !co(f)
bool ce(const tensor_train &f, std::span<const literal> c);
/// Implicant check t |= f; the empty term implies f iff va(f)
bool im(const tensor_train &f, std::span<const literal> t);

tensor_train and_bc(const tensor_train &f, const tensor_train &g);
/// Computed as 1 - (1 - f) o (1 - g)
tensor_train or_bc(const tensor_train &f, const tensor_train &g);
/// Computed as 1 + (-f); rank grows by one
tensor_train not_c(const tensor_train &f);
/// Conditioning f|t; map and ranks are unchanged
tensor_train cd(const tensor_train &f, std::span<const literal> t);
/// Forgetting a single variable: (f|x) | (f|!x)
tensor_train sfo(const tensor_train &f, var_t v);

/// Ceiling for the fold operations below
struct fold_options {
  std::size_t max_rank = 4096;
};

/// Accumulator rank before the first step and after each step
struct fold_stats {
  std::vector<std::size_t> ranks;
};

/// Rank and_bc / or_bc would produce, without building the result
std::size_t predicted_and_rank(const tensor_train &f, const tensor_train &g);
std::size_t predicted_or_rank(const tensor_train &f, const tensor_train &g);

/// Left folds of and_bc / or_bc. Throws errc::empty_list on no operands and
/// rank_guard_error (carrying the operand index) past opts.max_rank.
tensor_train and_c(std::span<const tensor_train> fs, const fold_options &opts = {},
                   fold_stats *stats = nullptr);
tensor_train or_c(std::span<const tensor_train> fs, const fold_options &opts = {},
                  fold_stats *stats = nullptr);
/// Forgetting a variable set as a fold of sfo under the same rank guard
tensor_train fo(const tensor_train &f, std::span<const var_t> vars,
                const fold_options &opts = {}, fold_stats *stats = nullptr);

/// Partial assignment: cube[j-1] is 0, 1, or -1 when x_j is unconstrained
using cube = std::vector<std::int8_t>;

/// Number of full assignments a cube stands for
big_count cube_size(const cube &c);

/// Visits every full assignment of a cube in lexicographic order
template <class Fn> void for_each_assignment(const cube &c, Fn &&fn) {
  std::vector<std::uint8_t> bits(c.size(), 0);
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] < 0)
      free.push_back(j);
    else
      bits[j] = static_cast<std::uint8_t>(c[j]);
  }
  for (;;) {
    fn(std::span<const std::uint8_t>(bits));
    std::size_t k = free.size();
    while (k > 0 && bits[free[k - 1]] == 1)
      bits[free[--k]] = 0;
    if (k == 0)
      return;
    bits[free[k - 1]] = 1;
  }
}

/// Streams disjoint cubes whose union is exactly the model set of f.
/// Branches on mapped variables in map order, low value first, and emits a
/// cube as soon as the conditioned function is valid.
class model_enumerator {
public:
  explicit model_enumerator(tensor_train f);

  std::optional<cube> next();

private:
  struct frame {
    tensor_train g;
    std::size_t depth;
    cube partial;
  };
  std::size_t _arity;
  std::vector<var_t> _map;
  big_count _all;
  std::vector<frame> _stack;
};

/// Collects enumerator output, stopping once the cubes cover `limit` models
std::vector<cube> me(const tensor_train &f,
                     std::optional<big_count> limit = std::nullopt);

} // namespace ttkc
