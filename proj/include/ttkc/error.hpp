/// @file  error.hpp
/// @brief Error kinds raised by the library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ttkc {

enum class errc {
  malformed_tt,
  non_binary_value,
  non_ternary,
  position_violates_order,
  arity_mismatch,
  not_aligned,
  weight_arity_mismatch,
  bad_literal,
  inconsistent_term,
  empty_list,
  rank_guard_exceeded,
  unknown_variable,
  order_mismatch,
  constant_function,
  arity_too_large,
  parse_error,
};

std::string_view to_string(errc code) noexcept;

/// Base exception for every failure reported by ttkc
class error : public std::runtime_error {
public:
  error(errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code) {}

  errc code() const noexcept { return _code; }

private:
  errc _code;
};

/// Raised by folds and compilers when an intermediate rank passes the ceiling
class rank_guard_error : public error {
public:
  rank_guard_error(std::size_t index, std::size_t rank, std::size_t ceiling)
      : error(errc::rank_guard_exceeded,
              "rank " + std::to_string(rank) + " exceeds ceiling " +
                  std::to_string(ceiling) + " at operand " +
                  std::to_string(index)),
        _index(index), _rank(rank) {}

  /// Zero-based index of the operand whose fold step broke the ceiling
  std::size_t index() const noexcept { return _index; }
  std::size_t rank() const noexcept { return _rank; }

private:
  std::size_t _index;
  std::size_t _rank;
};

/// Input format error carrying a source name and 1-based line number
class parse_error : public error {
public:
  parse_error(const std::string &source, std::size_t line,
              const std::string &what)
      : error(errc::parse_error,
              source + ":" + std::to_string(line) + ": " + what),
        _line(line) {}

  std::size_t line() const noexcept { return _line; }

private:
  std::size_t _line;
};

} // namespace ttkc
