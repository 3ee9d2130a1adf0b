/// @file  oracle.hpp
/// @brief Brute-force reference semantics over explicit truth tables
///
/// Truth tables list 2^n values in lexicographic assignment order with x_1
/// as the most significant bit, so index (a_1 a_2 ... a_n) in binary.

#pragma once

#include "ttkc/logic.hpp"
#include "ttkc/numeric.hpp"
#include "ttkc/ops.hpp"
#include "ttkc/tensor_train.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ttkc::oracle {

inline constexpr std::size_t max_table_arity = 24;
inline constexpr std::size_t max_op_arity = 20;

struct truth_table {
  std::size_t arity = 0;
  std::vector<std::uint8_t> bits;

  bool at(std::span<const std::uint8_t> assignment) const;
  std::size_t index_of(std::span<const std::uint8_t> assignment) const;

  friend bool operator==(const truth_table &, const truth_table &) = default;
};

/// Assignment bits of a table index
std::vector<std::uint8_t> assignment_of(std::size_t arity, std::size_t index);

/// Table of an arbitrary predicate over n variables
truth_table tabulate(std::size_t arity,
                     const std::function<bool(std::span<const std::uint8_t>)> &fn);
truth_table tabulate(const formula &f, std::size_t arity);

struct expansion {
  truth_table table;
  /// False if some assignment evaluates outside {0, 1}; the corresponding
  /// table bit is then meaningless.
  bool binary = true;
};

/// Evaluates a tensor train on every assignment (arity <= 24)
expansion expand(const tensor_train &tt);

/// Reference semantics on truth tables (arity <= 20)
big_count ct(const truth_table &f);
bool co(const truth_table &f);
bool va(const truth_table &f);
bool eq(const truth_table &f, const truth_table &g);
bool se(const truth_table &f, const truth_table &g);
bool ce(const truth_table &f, std::span<const literal> c);
bool im(const truth_table &f, std::span<const literal> t);
truth_table conj(const truth_table &f, const truth_table &g);
truth_table disj(const truth_table &f, const truth_table &g);
truth_table negate(const truth_table &f);
/// Conditioning: each variable of t is fixed, the variable set is unchanged
truth_table cd(const truth_table &f, std::span<const literal> t);
/// Forgetting: exists vars. f
truth_table fo(const truth_table &f, std::span<const var_t> vars);
truth_table sfo(const truth_table &f, var_t v);
/// Models in lexicographic order
std::vector<std::vector<std::uint8_t>> me(const truth_table &f);

/// Exact rank over Q of the 2^k x 2^(m-k) unfolding of the mode tensor of
/// `tt` after its first k cores (fraction-free elimination). Each side must
/// have at most 2^12 indices.
std::size_t unfolding_rank(const tensor_train &tt, std::size_t split);

/// Exact rank over Q of an integer matrix (row-major), by Bareiss elimination
std::size_t matrix_rank(std::vector<big_count> entries, std::size_t rows,
                        std::size_t cols);

} // namespace ttkc::oracle
