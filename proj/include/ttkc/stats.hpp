/// @file  stats.hpp
/// @brief Size and rank summary of a tensor train

#pragma once

#include "ttkc/tensor_train.hpp"

#include <array>
#include <string>
#include <vector>

namespace ttkc {

struct stats_report {
  /// (r_i, 2, r_{i+1}) per core
  std::vector<std::array<std::size_t, 3>> shapes;
  std::size_t max_rank = 0;
  std::size_t modes = 0;
  std::size_t arity = 0;
  std::size_t entries = 0;
  std::size_t nonzeros = 0;
  /// r + m, a lower bound on the entry count
  std::size_t lower_bound = 0;
};

stats_report make_stats(const tensor_train &tt);

/// Aligned `key: value` lines
std::string format_stats(const stats_report &s);

} // namespace ttkc
