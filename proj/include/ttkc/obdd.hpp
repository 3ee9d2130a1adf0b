/// @file  obdd.hpp
/// @brief Reduced ordered BDDs, level-wise smooth BDDs and the layer-wise
///        encoding of the latter as tensor trains

#pragma once

#include "ttkc/logic.hpp"
#include "ttkc/numeric.hpp"
#include "ttkc/tensor_train.hpp"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace ttkc {

using node_id = std::uint32_t;
inline constexpr node_id bdd_false = 0;
inline constexpr node_id bdd_true = 1;

struct bdd_node {
  var_t var; ///< 0 for the two terminals
  node_id lo;
  node_id hi;

  friend bool operator==(const bdd_node &, const bdd_node &) = default;
};

/// Immutable arena-stored BDD. Ids 0 and 1 are the terminals; every other id
/// indexes a non-terminal node whose children precede it in the arena.
class obdd {
public:
  /// Validates id resolution and that every edge respects `order`
  /// (order[k] is the k-th variable; empty means x_1 < ... < x_n).
  obdd(std::size_t arity, std::vector<bdd_node> nodes, node_id root,
       std::vector<var_t> order = {});

  static obdd constant(std::size_t arity, bool value);

  std::size_t arity() const noexcept { return _arity; }
  node_id root() const noexcept { return _root; }
  const std::vector<bdd_node> &nodes() const noexcept { return _nodes; }
  const bdd_node &node(node_id id) const { return _nodes[id]; }
  const std::vector<var_t> &order() const noexcept { return _order; }
  bool natural_order() const noexcept;
  /// Position of `v` in the order, n for terminals (var 0)
  std::size_t level(var_t v) const noexcept {
    return v == 0 ? _arity : _level[v - 1];
  }
  bool is_terminal(node_id id) const noexcept { return id <= bdd_true; }

  /// Node count including both terminals
  std::size_t size() const noexcept { return _nodes.size(); }
  std::size_t internal_nodes() const noexcept { return _nodes.size() - 2; }

  /// Variables labelling some node, sorted by the order
  std::vector<var_t> support() const;

  bool is_reduced() const;
  bool eval(std::span<const std::uint8_t> assignment) const;

  friend bool operator==(const obdd &a, const obdd &b) {
    return a._arity == b._arity && a._root == b._root &&
           a._nodes == b._nodes && a._order == b._order;
  }

private:
  std::size_t _arity;
  std::vector<bdd_node> _nodes;
  node_id _root;
  std::vector<var_t> _order;
  std::vector<std::size_t> _level;
};

enum class bool_op { conj, disj, exclusive };

/// Hash-consing builder producing reduced diagrams
class obdd_builder {
public:
  explicit obdd_builder(std::size_t arity, std::vector<var_t> order = {});

  node_id mk(var_t v, node_id lo, node_id hi);
  node_id variable(var_t v);
  node_id apply(bool_op op, node_id a, node_id b);
  node_id negate(node_id a);
  /// Copies a diagram with the same arity and order into this builder
  node_id import(const obdd &b);
  node_id from_formula(const formula &f);

  /// Reachable part below `root`, renumbered children-first
  obdd extract(node_id root) const;

private:
  struct key {
    std::uint64_t a, b;
    friend bool operator==(const key &, const key &) = default;
  };
  struct key_hash {
    std::size_t operator()(const key &k) const noexcept {
      return std::hash<std::uint64_t>()(k.a * 0x9e3779b97f4a7c15ULL ^ k.b);
    }
  };

  std::size_t level_of(node_id id) const noexcept;

  std::size_t _arity;
  std::vector<var_t> _order;
  std::vector<std::size_t> _level;
  std::vector<bdd_node> _nodes;
  std::unordered_map<key, node_id, key_hash> _unique;
  std::unordered_map<key, node_id, key_hash> _cache;
};

/// Reduced OBDD of a formula; throws errc::unknown_variable for variables
/// outside [1, arity]
obdd build_from_formula(const formula &f, std::size_t arity,
                        std::vector<var_t> order = {});
/// Reduced OBDD from a truth table in x_1-most-significant order
obdd from_truth_table(std::size_t arity, std::span<const std::uint8_t> bits);

/// Throws errc::order_mismatch unless both operands share arity and order
obdd apply(bool_op op, const obdd &a, const obdd &b);
obdd negate(const obdd &a);
obdd reduce(const obdd &a);
/// Exact model count over all n variables
big_count obdd_count(const obdd &a);

/// Level-wise smooth BDD: every edge from a node labelled with the k-th
/// variable of `vars` ends at a node labelled with the (k+1)-th, and nodes
/// labelled with the last variable point to terminals.
struct lsbdd {
  obdd graph;
  std::vector<var_t> vars;

  /// Non-terminal node count
  std::size_t size() const noexcept { return graph.internal_nodes(); }
};

bool is_level_smooth(const obdd &b, std::span<const var_t> vars);

/// Pads skipping edges with pass-through nodes (lo = hi), shared per
/// (target, level), until the diagram is smooth with respect to its support.
lsbdd to_lsbdd(const obdd &b);

/// Layer-wise encoding: core i holds the LO/HI adjacency between the nodes of
/// level i and level i+1, nodes numbered by ascending arena id. Throws
/// errc::constant_function for a terminal root and errc::order_mismatch for
/// a non-natural order.
tensor_train encode_tt(const lsbdd &l);

/// reduce -> to_lsbdd -> encode_tt, with constants as single-mode TTs
tensor_train compile_obdd(const obdd &b);

} // namespace ttkc
