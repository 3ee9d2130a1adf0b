/// @file  logic.hpp
/// @brief Literals, terms, clauses and a small Boolean expression language

#pragma once

#include "ttkc/tensor_train.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ttkc {

struct literal {
  var_t var;
  bool positive;

  friend bool operator==(const literal &, const literal &) = default;
};

/// Conjunction of literals
using term = std::vector<literal>;
/// Disjunction of literals
using clause = std::vector<literal>;

/// DIMACS-style literal: +v or -v
literal from_dimacs(long value);

/// Throws errc::bad_literal if a literal is out of [1, n] or two literals
/// share a variable.
void check_literals(std::span<const literal> lits, std::size_t arity);

/// Literals sorted by variable
std::vector<literal> sorted_literals(std::span<const literal> lits);

/// Boolean expression tree
class formula {
public:
  enum class kind : std::uint8_t { constant, variable, negation, conj, disj,
                                   exclusive, implies, iff };

  static formula constant(bool value);
  static formula variable(var_t v);
  static formula negation(formula f);
  static formula binary(kind k, formula lhs, formula rhs);

  kind op() const noexcept { return _kind; }
  bool value() const noexcept { return _value; }
  var_t var() const noexcept { return _var; }
  const formula &lhs() const { return _args->first; }
  const formula &rhs() const { return _args->second; }
  const formula &operand() const { return _args->first; }

  /// Largest variable index mentioned (0 if none)
  var_t max_var() const;
  /// Number of variable occurrences
  std::size_t leaves() const;

  /// Evaluates on assignment[j-1] = value of x_j
  bool eval(std::span<const std::uint8_t> assignment) const;

  /// Renames each x_j to x_{rename[j-1]}
  formula relabel(std::span<const var_t> rename) const;

  std::string to_string() const;

private:
  kind _kind = kind::constant;
  bool _value = false;
  var_t _var = 0;
  std::shared_ptr<const std::pair<formula, formula>> _args;
};

/// Parses the expression grammar: variables `x<k>`, constants `0 1 true
/// false`, operators `! & ^ | -> <->` from tightest to loosest, parentheses.
/// `->` associates to the right, the others to the left. Throws parse_error.
formula parse_formula(std::string_view text);

} // namespace ttkc
