/// @file  kernels.hpp
/// @brief Exact linear-algebra kernels over ternary tensor trains
///
/// The hot loops (full contraction, Hadamard cores, inner-product sweep) are
/// OpenMP-parallel; results are deterministic because every output element
/// is produced by exactly one thread in a fixed order. Serial counterparts
/// live in reference.hpp and are used by the test-suite as a second route.

#pragma once

#include "ttkc/numeric.hpp"
#include "ttkc/tensor_train.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ttkc {

/// Scalar value of the represented tensor at a full n-bit assignment.
/// assignment[j-1] is the value of variable j.
big_count evaluate_value(const tensor_train &tt,
                         std::span<const std::uint8_t> assignment);

/// As evaluate_value, but throws errc::non_binary_value unless the result is
/// 0 or 1.
bool evaluate(const tensor_train &tt, std::span<const std::uint8_t> assignment);

/// Inserts an identity-slice core for variable `v` before core `position`
/// (0 = front, modes() = back). The represented function is unchanged.
tensor_train insert_identity(const tensor_train &tt, std::size_t position,
                             var_t v);

/// Re-expresses `tt` over the strictly increasing variable list `vars`, which
/// must contain tt.map(), by inserting identity cores.
tensor_train embed(const tensor_train &tt, std::span<const var_t> vars);

/// Brings two tensor trains onto the union of their maps
std::pair<tensor_train, tensor_train> align(const tensor_train &a,
                                            const tensor_train &b);

bool is_aligned(const tensor_train &a, const tensor_train &b) noexcept;

/// Elementwise sum of aligned tensor trains (block-diagonal cores).
/// Single-mode inputs are added entrywise and must stay ternary.
tensor_train tt_sum(const tensor_train &a, const tensor_train &b);

/// Elementwise product of aligned tensor trains (slice-wise Kronecker cores)
tensor_train tt_hadamard(const tensor_train &a, const tensor_train &b);

/// Sum over all mode assignments of a(x) * b(x) for aligned inputs, computed
/// by a left-to-right sweep that never forms the Kronecker cores.
big_count tt_inner(const tensor_train &a, const tensor_train &b);

/// Multiplies the first core by -1
tensor_train negate_scalar(const tensor_train &tt);

/// Rank-1 all-ones tensor train over the given strictly increasing map
tensor_train ones_tt(std::size_t arity, std::vector<var_t> map);

/// Constant function as a single-mode tensor train on variable 1
tensor_train constant_tt(std::size_t arity, bool value);

/// Sum over mode assignments of tt(x) * prod_i weights[i][x_i], where
/// weights[i] applies to core i.
rational contract_weights(const tensor_train &tt,
                          std::span<const std::pair<rational, rational>> weights);

/// Values of the mode tensor at all 2^m mode assignments; index bit m-1-i
/// holds the value of core i (core 0 is the most significant bit).
std::vector<big_count> contract_all(const tensor_train &tt);

/// int64 fast path of contract_all; returns std::nullopt on overflow.
std::optional<std::vector<std::int64_t>>
contract_all_i64(const tensor_train &tt);

} // namespace ttkc
