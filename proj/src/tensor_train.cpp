#include "ttkc/tensor_train.hpp"

#include "ttkc/error.hpp"

#include <algorithm>
#include <string>

namespace ttkc {

std::string_view to_string(errc code) noexcept {
  switch (code) {
  case errc::malformed_tt: return "MalformedTT";
  case errc::non_binary_value: return "NonBinaryValue";
  case errc::non_ternary: return "NonTernary";
  case errc::position_violates_order: return "PositionViolatesOrder";
  case errc::arity_mismatch: return "ArityMismatch";
  case errc::not_aligned: return "NotAligned";
  case errc::weight_arity_mismatch: return "WeightArityMismatch";
  case errc::bad_literal: return "BadLiteral";
  case errc::inconsistent_term: return "InconsistentTerm";
  case errc::empty_list: return "EmptyList";
  case errc::rank_guard_exceeded: return "RankGuardExceeded";
  case errc::unknown_variable: return "UnknownVariable";
  case errc::order_mismatch: return "OrderMismatch";
  case errc::constant_function: return "ConstantFunction";
  case errc::arity_too_large: return "ArityTooLarge";
  case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

ternary_core::ternary_core(std::size_t left_rank, std::size_t right_rank,
                           std::vector<std::int8_t> entries)
    : _left(left_rank), _right(right_rank), _entries(std::move(entries)) {
  if (_left == 0 || _right == 0)
    throw error(errc::malformed_tt, "core ranks must be positive");
  if (_entries.size() != 2 * _left * _right)
    throw error(errc::malformed_tt,
                "core " + std::to_string(_left) + "x2x" +
                    std::to_string(_right) + " needs " +
                    std::to_string(2 * _left * _right) + " entries, got " +
                    std::to_string(_entries.size()));
  for (auto v : _entries)
    if (v < -1 || v > 1)
      throw error(errc::non_ternary,
                  "core entry " + std::to_string(int(v)) +
                      " outside {-1,0,1}");
}

ternary_core ternary_core::zeros(std::size_t left_rank,
                                 std::size_t right_rank) {
  return {left_rank, right_rank,
          std::vector<std::int8_t>(2 * left_rank * right_rank, 0)};
}

ternary_core ternary_core::identity(std::size_t rank) {
  std::vector<std::int8_t> e(2 * rank * rank, 0);
  for (std::size_t i = 0; i < rank; ++i)
    for (unsigned b = 0; b < 2; ++b)
      e[(i * 2 + b) * rank + i] = 1;
  return {rank, rank, std::move(e)};
}

ternary_core ternary_core::vector(std::int8_t v0, std::int8_t v1) {
  return {1, 1, {v0, v1}};
}

std::size_t ternary_core::nonzeros() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(_entries.begin(), _entries.end(),
                    [](std::int8_t v) { return v != 0; }));
}

tensor_train::tensor_train(std::size_t arity, std::vector<ternary_core> cores,
                           std::vector<var_t> map)
    : _arity(arity), _cores(std::move(cores)), _map(std::move(map)) {
  const auto m = _cores.size();
  if (m == 0)
    throw error(errc::malformed_tt, "a tensor train needs at least one core");
  if (m > _arity)
    throw error(errc::malformed_tt,
                std::to_string(m) + " modes exceed arity " +
                    std::to_string(_arity));
  if (_map.size() != m)
    throw error(errc::malformed_tt, "map length differs from mode count");
  if (_cores.front().left_rank() != 1 || _cores.back().right_rank() != 1)
    throw error(errc::malformed_tt, "boundary ranks must be 1");
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (_cores[i].right_rank() != _cores[i + 1].left_rank())
      throw error(errc::malformed_tt,
                  "rank mismatch between cores " + std::to_string(i + 1) +
                      " and " + std::to_string(i + 2));
  for (std::size_t i = 0; i < m; ++i) {
    if (_map[i] < 1 || _map[i] > _arity)
      throw error(errc::malformed_tt,
                  "map entry " + std::to_string(_map[i]) + " out of range");
    if (i > 0 && _map[i - 1] >= _map[i])
      throw error(errc::malformed_tt, "map is not strictly increasing");
  }
}

std::vector<std::size_t> tensor_train::ranks() const {
  std::vector<std::size_t> out;
  out.reserve(_cores.size() + 1);
  for (const auto &c : _cores)
    out.push_back(c.left_rank());
  out.push_back(_cores.back().right_rank());
  return out;
}

std::size_t tensor_train::rank() const noexcept {
  std::size_t r = 1;
  for (const auto &c : _cores)
    r = std::max(r, c.right_rank());
  return r;
}

std::size_t tensor_train::size() const noexcept {
  std::size_t s = 0;
  for (const auto &c : _cores)
    s += c.size();
  return s;
}

std::size_t tensor_train::nonzeros() const noexcept {
  std::size_t s = 0;
  for (const auto &c : _cores)
    s += c.nonzeros();
  return s;
}

std::optional<std::size_t> tensor_train::mode_of(var_t v) const noexcept {
  auto it = std::lower_bound(_map.begin(), _map.end(), v);
  if (it == _map.end() || *it != v)
    return std::nullopt;
  return static_cast<std::size_t>(it - _map.begin());
}

bool is_ternary(const tensor_train &tt) noexcept {
  for (const auto &c : tt.cores())
    for (auto v : c.entries())
      if (v < -1 || v > 1)
        return false;
  return true;
}

} // namespace ttkc
