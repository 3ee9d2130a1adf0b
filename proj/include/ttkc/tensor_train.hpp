/// @file  tensor_train.hpp
/// @brief Ternary tensor-train representation of Boolean functions
///
/// A tensor_train over `n` variables is a chain of cores A_1..A_m, each of
/// shape r_i x 2 x r_{i+1} with entries in {-1, 0, 1}, together with a
/// strictly increasing map from core index to variable index. Variables not
/// in the image of the map are don't-cares of the represented function.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ttkc {

/// Variable index, 1-based as in DIMACS
using var_t = std::uint32_t;

/// One r x 2 x q core, stored row-major over (left, mode, right)
class ternary_core {
public:
  /// Validates shape and that every entry lies in {-1, 0, 1}
  ternary_core(std::size_t left_rank, std::size_t right_rank,
               std::vector<std::int8_t> entries);

  static ternary_core zeros(std::size_t left_rank, std::size_t right_rank);
  /// Core whose two slices are both the identity of the given size
  static ternary_core identity(std::size_t rank);
  /// 1 x 2 x 1 core holding (v0, v1)
  static ternary_core vector(std::int8_t v0, std::int8_t v1);

  std::size_t left_rank() const noexcept { return _left; }
  std::size_t right_rank() const noexcept { return _right; }
  std::size_t size() const noexcept { return _entries.size(); }
  std::size_t nonzeros() const noexcept;

  std::int8_t operator()(std::size_t l, unsigned b, std::size_t r) const {
    return _entries[index(l, b, r)];
  }

  /// Row `l` of slice `b`, i.e. A(l, b, .)
  std::span<const std::int8_t> row(std::size_t l, unsigned b) const {
    return {_entries.data() + index(l, b, 0), _right};
  }

  std::span<const std::int8_t> entries() const noexcept { return _entries; }

  std::size_t index(std::size_t l, unsigned b, std::size_t r) const noexcept {
    return (l * 2 + b) * _right + r;
  }

  friend bool operator==(const ternary_core &,
                         const ternary_core &) = default;

private:
  std::size_t _left;
  std::size_t _right;
  std::vector<std::int8_t> _entries;
};

/// Immutable tensor train over `arity` variables
class tensor_train {
public:
  /// Throws error(errc::malformed_tt) unless boundary ranks are 1, adjacent
  /// ranks chain, 1 <= m <= n, and the map is strictly increasing in [1, n].
  tensor_train(std::size_t arity, std::vector<ternary_core> cores,
               std::vector<var_t> map);

  std::size_t arity() const noexcept { return _arity; }
  std::size_t modes() const noexcept { return _cores.size(); }
  const ternary_core &core(std::size_t i) const { return _cores[i]; }
  const std::vector<ternary_core> &cores() const noexcept { return _cores; }
  /// map()[i] is the variable read by core i
  const std::vector<var_t> &map() const noexcept { return _map; }

  /// Bond dimensions r_1..r_{m+1}; the first and last are always 1
  std::vector<std::size_t> ranks() const;
  /// Largest bond dimension
  std::size_t rank() const noexcept;
  /// Total number of core entries
  std::size_t size() const noexcept;
  std::size_t nonzeros() const noexcept;

  /// Core index reading `v`, if the function depends on it syntactically
  std::optional<std::size_t> mode_of(var_t v) const noexcept;

  friend bool operator==(const tensor_train &,
                         const tensor_train &) = default;

private:
  std::size_t _arity;
  std::vector<ternary_core> _cores;
  std::vector<var_t> _map;
};

/// Checks every core entry independently of construction-time validation.
bool is_ternary(const tensor_train &tt) noexcept;

} // namespace ttkc
