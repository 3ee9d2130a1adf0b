/// @file  reference.hpp
/// @brief Serial reference kernels
///
/// Straightforward single-threaded counterparts of the kernels in
/// kernels.hpp. They follow a different route where one exists (explicit
/// Kronecker-sum matrices for the inner product, one evaluation per
/// assignment for contraction) and are kept for testing and benchmarking.

#pragma once

#include "ttkc/numeric.hpp"
#include "ttkc/tensor_train.hpp"

#include <span>
#include <vector>

namespace ttkc::reference {

big_count evaluate_value(const tensor_train &tt,
                         std::span<const std::uint8_t> assignment);

std::vector<big_count> contract_all(const tensor_train &tt);

tensor_train tt_hadamard(const tensor_train &a, const tensor_train &b);

/// Inner product via the explicit matrices sum_b A(.,b,.) (x) B(.,b,.)
big_count tt_inner(const tensor_train &a, const tensor_train &b);

} // namespace ttkc::reference
