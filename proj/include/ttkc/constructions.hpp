/// @file  constructions.hpp
/// @brief Canonical tensor-train builders: literals, terms, clauses, CNF/DNF,
///        formulas and the hidden-weighted-bit family

#pragma once

#include "ttkc/logic.hpp"
#include "ttkc/ops.hpp"
#include "ttkc/tensor_train.hpp"

#include <span>
#include <vector>

namespace ttkc {

/// Rank-1 TT: (0,1) cores for positive literals, (1,0) for negative ones
tensor_train term_tt(std::span<const literal> t, std::size_t arity);

/// Rank-2 TT built as 1 - term(negated literals)
tensor_train clause_tt(std::span<const literal> c, std::size_t arity);

/// Left-to-right and_c fold of clause TTs; the empty list is constant true
/// and an empty clause makes the result constant false.
tensor_train cnf_tt(std::span<const clause> clauses, std::size_t arity,
                    const fold_options &opts = {}, fold_stats *stats = nullptr);

/// Left-to-right or_c fold of term TTs; the empty list is constant false
tensor_train dnf_tt(std::span<const term> terms, std::size_t arity,
                    const fold_options &opts = {}, fold_stats *stats = nullptr);

/// Structural compilation of an expression tree with TT operations.
/// Exclusive-or is built as a o (1 - b) + (1 - a) o b.
tensor_train formula_tt(const formula &f, std::size_t arity,
                        const fold_options &opts = {});

/// HWB_n as a rank-2n tensor train with map (1..n)
tensor_train hwb_tt(std::size_t n);

/// HWB_n evaluated from its definition
bool hwb_value(std::span<const std::uint8_t> x);

/// (x_i | !y_i) & (!x_i | y_i) for i = 1..pairs with x_i = i, y_i = pairs + i
std::vector<clause> equality_cnf(std::size_t pairs);

} // namespace ttkc
