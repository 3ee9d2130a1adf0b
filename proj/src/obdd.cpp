#include "ttkc/obdd.hpp"

#include "ttkc/error.hpp"
#include "ttkc/kernels.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ttkc {
namespace {

std::vector<var_t> natural(std::size_t n) {
  std::vector<var_t> o(n);
  for (std::size_t i = 0; i < n; ++i)
    o[i] = static_cast<var_t>(i + 1);
  return o;
}

std::vector<std::size_t> levels_of(const std::vector<var_t> &order,
                                   std::size_t n) {
  if (order.size() != n)
    throw error(errc::order_mismatch, "order must list all " +
                                          std::to_string(n) + " variables");
  std::vector<std::size_t> level(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    var_t v = order[k];
    if (v < 1 || v > n || level[v - 1] != n)
      throw error(errc::order_mismatch, "order is not a permutation");
    level[v - 1] = k;
  }
  return level;
}

} // namespace

obdd::obdd(std::size_t arity, std::vector<bdd_node> nodes, node_id root,
           std::vector<var_t> order)
    : _arity(arity), _nodes(std::move(nodes)), _root(root),
      _order(order.empty() ? natural(arity) : std::move(order)),
      _level(levels_of(_order, _arity)) {
  if (_nodes.size() < 2)
    throw error(errc::malformed_tt, "BDD arena must hold both terminals");
  _nodes[bdd_false] = {0, bdd_false, bdd_false};
  _nodes[bdd_true] = {0, bdd_true, bdd_true};
  if (_root >= _nodes.size())
    throw error(errc::malformed_tt, "root id out of range");
  for (node_id id = 2; id < _nodes.size(); ++id) {
    const auto &n = _nodes[id];
    if (n.var < 1 || n.var > _arity)
      throw error(errc::unknown_variable,
                  "node " + std::to_string(id) + " labelled x" +
                      std::to_string(n.var));
    for (node_id c : {n.lo, n.hi}) {
      if (c >= id)
        throw error(errc::malformed_tt,
                    "node " + std::to_string(id) +
                        " must come after its children");
      if (!is_terminal(c) && level(_nodes[c].var) <= level(n.var))
        throw error(errc::order_mismatch,
                    "edge " + std::to_string(id) + "->" + std::to_string(c) +
                        " violates the variable order");
    }
  }
}

obdd obdd::constant(std::size_t arity, bool value) {
  return {arity, {{0, 0, 0}, {0, 1, 1}}, value ? bdd_true : bdd_false};
}

bool obdd::natural_order() const noexcept {
  for (std::size_t k = 0; k < _order.size(); ++k)
    if (_order[k] != k + 1)
      return false;
  return true;
}

std::vector<var_t> obdd::support() const {
  std::vector<std::uint8_t> seen(_arity + 1, 0);
  for (node_id id = 2; id < _nodes.size(); ++id)
    seen[_nodes[id].var] = 1;
  std::vector<var_t> out;
  for (var_t v : _order)
    if (seen[v])
      out.push_back(v);
  return out;
}

bool obdd::is_reduced() const {
  std::map<std::tuple<var_t, node_id, node_id>, node_id> seen;
  for (node_id id = 2; id < _nodes.size(); ++id) {
    const auto &n = _nodes[id];
    if (n.lo == n.hi)
      return false;
    if (!seen.emplace(std::make_tuple(n.var, n.lo, n.hi), id).second)
      return false;
  }
  return true;
}

bool obdd::eval(std::span<const std::uint8_t> a) const {
  if (a.size() != _arity)
    throw error(errc::arity_mismatch, "assignment length differs from arity");
  node_id id = _root;
  while (!is_terminal(id))
    id = a[_nodes[id].var - 1] ? _nodes[id].hi : _nodes[id].lo;
  return id == bdd_true;
}

obdd_builder::obdd_builder(std::size_t arity, std::vector<var_t> order)
    : _arity(arity), _order(order.empty() ? natural(arity) : std::move(order)),
      _level(levels_of(_order, arity)),
      _nodes{{0, bdd_false, bdd_false}, {0, bdd_true, bdd_true}} {}

std::size_t obdd_builder::level_of(node_id id) const noexcept {
  return id <= bdd_true ? _arity : _level[_nodes[id].var - 1];
}

node_id obdd_builder::mk(var_t v, node_id lo, node_id hi) {
  if (lo == hi)
    return lo;
  key k{(std::uint64_t(v) << 32) | lo, hi};
  auto [it, fresh] = _unique.try_emplace(k, 0);
  if (fresh) {
    it->second = static_cast<node_id>(_nodes.size());
    _nodes.push_back({v, lo, hi});
  }
  return it->second;
}

node_id obdd_builder::variable(var_t v) {
  if (v < 1 || v > _arity)
    throw error(errc::unknown_variable,
                "x" + std::to_string(v) + " outside arity " +
                    std::to_string(_arity));
  return mk(v, bdd_false, bdd_true);
}

node_id obdd_builder::apply(bool_op op, node_id a, node_id b) {
  if (a <= bdd_true && b <= bdd_true) {
    switch (op) {
    case bool_op::conj: return a & b;
    case bool_op::disj: return a | b;
    case bool_op::exclusive: return a ^ b;
    }
  }
  switch (op) {
  case bool_op::conj:
    if (a == bdd_false || b == bdd_false) return bdd_false;
    if (a == bdd_true || a == b) return b;
    if (b == bdd_true) return a;
    break;
  case bool_op::disj:
    if (a == bdd_true || b == bdd_true) return bdd_true;
    if (a == bdd_false || a == b) return b;
    if (b == bdd_false) return a;
    break;
  case bool_op::exclusive:
    if (a == b) return bdd_false;
    if (a == bdd_false) return b;
    if (b == bdd_false) return a;
    break;
  }
  if (a > b)
    std::swap(a, b);
  key k{(std::uint64_t(op) << 32) | a, b};
  if (auto it = _cache.find(k); it != _cache.end())
    return it->second;
  const std::size_t la = level_of(a), lb = level_of(b);
  const std::size_t top = std::min(la, lb);
  const var_t v = _order[top];
  node_id a0 = la == top ? _nodes[a].lo : a, a1 = la == top ? _nodes[a].hi : a;
  node_id b0 = lb == top ? _nodes[b].lo : b, b1 = lb == top ? _nodes[b].hi : b;
  node_id lo = apply(op, a0, b0);
  node_id hi = apply(op, a1, b1);
  node_id out = mk(v, lo, hi);
  _cache.emplace(k, out);
  return out;
}

node_id obdd_builder::negate(node_id a) {
  return apply(bool_op::exclusive, a, bdd_true);
}

node_id obdd_builder::import(const obdd &b) {
  if (b.arity() != _arity || b.order() != _order)
    throw error(errc::order_mismatch,
                "diagram arity or variable order differs from builder");
  std::vector<node_id> map(b.size());
  map[bdd_false] = bdd_false;
  map[bdd_true] = bdd_true;
  for (node_id id = 2; id < b.size(); ++id) {
    const auto &n = b.node(id);
    map[id] = mk(n.var, map[n.lo], map[n.hi]);
  }
  return map[b.root()];
}

node_id obdd_builder::from_formula(const formula &f) {
  using k = formula::kind;
  switch (f.op()) {
  case k::constant: return f.value() ? bdd_true : bdd_false;
  case k::variable: return variable(f.var());
  case k::negation: return negate(from_formula(f.operand()));
  default: break;
  }
  node_id a = from_formula(f.lhs());
  node_id b = from_formula(f.rhs());
  switch (f.op()) {
  case k::conj: return apply(bool_op::conj, a, b);
  case k::disj: return apply(bool_op::disj, a, b);
  case k::exclusive: return apply(bool_op::exclusive, a, b);
  case k::implies: return apply(bool_op::disj, negate(a), b);
  case k::iff: return negate(apply(bool_op::exclusive, a, b));
  default: break;
  }
  throw error(errc::parse_error, "unhandled formula node");
}

obdd obdd_builder::extract(node_id root) const {
  std::vector<bdd_node> out{{0, bdd_false, bdd_false},
                            {0, bdd_true, bdd_true}};
  std::unordered_map<node_id, node_id> renumber{{bdd_false, bdd_false},
                                                {bdd_true, bdd_true}};
  // Iterative post-order, LO subtree before HI subtree.
  std::vector<std::pair<node_id, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (renumber.count(id))
      continue;
    const auto &n = _nodes[id];
    if (expanded) {
      renumber[id] = static_cast<node_id>(out.size());
      out.push_back({n.var, renumber.at(n.lo), renumber.at(n.hi)});
    } else {
      stack.push_back({id, true});
      stack.push_back({n.hi, false});
      stack.push_back({n.lo, false});
    }
  }
  return {_arity, std::move(out), renumber.at(root), _order};
}

obdd build_from_formula(const formula &f, std::size_t arity,
                        std::vector<var_t> order) {
  obdd_builder b(arity, std::move(order));
  return b.extract(b.from_formula(f));
}

obdd from_truth_table(std::size_t arity, std::span<const std::uint8_t> bits) {
  if (bits.size() != (std::size_t{1} << arity))
    throw error(errc::arity_mismatch, "truth table length must be 2^n");
  obdd_builder b(arity);
  // Bottom-up: level k holds the nodes for every prefix of length k.
  std::vector<node_id> layer(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    layer[i] = bits[i] ? bdd_true : bdd_false;
  for (std::size_t k = arity; k-- > 0;) {
    std::vector<node_id> up(layer.size() / 2);
    for (std::size_t i = 0; i < up.size(); ++i)
      up[i] = b.mk(static_cast<var_t>(k + 1), layer[2 * i], layer[2 * i + 1]);
    layer = std::move(up);
  }
  return b.extract(layer[0]);
}

obdd apply(bool_op op, const obdd &a, const obdd &b) {
  if (a.arity() != b.arity() || a.order() != b.order())
    throw error(errc::order_mismatch, "operands differ in arity or order");
  obdd_builder builder(a.arity(), a.order());
  node_id x = builder.import(a);
  node_id y = builder.import(b);
  return builder.extract(builder.apply(op, x, y));
}

obdd negate(const obdd &a) {
  obdd_builder builder(a.arity(), a.order());
  return builder.extract(builder.negate(builder.import(a)));
}

obdd reduce(const obdd &a) {
  obdd_builder builder(a.arity(), a.order());
  return builder.extract(builder.import(a));
}

big_count obdd_count(const obdd &a) {
  const std::size_t n = a.arity();
  std::vector<big_count> c(a.size());
  c[bdd_false] = 0;
  c[bdd_true] = 1;
  auto lvl = [&](node_id id) { return a.level(a.node(id).var); };
  for (node_id id = 2; id < a.size(); ++id) {
    const auto &node = a.node(id);
    const std::size_t l = lvl(id);
    c[id] = c[node.lo] * pow2(lvl(node.lo) - l - 1) +
            c[node.hi] * pow2(lvl(node.hi) - l - 1);
  }
  return c[a.root()] * pow2(a.is_terminal(a.root()) ? n : lvl(a.root()));
}

bool is_level_smooth(const obdd &b, std::span<const var_t> vars) {
  std::vector<std::size_t> idx(b.arity() + 1, vars.size() + 1);
  for (std::size_t k = 0; k < vars.size(); ++k)
    idx[vars[k]] = k;
  auto level = [&](node_id id) {
    return b.is_terminal(id) ? vars.size() : idx[b.node(id).var];
  };
  for (node_id id = 2; id < b.size(); ++id) {
    const auto &n = b.node(id);
    if (idx[n.var] > vars.size())
      return false;
    if (level(n.lo) != level(id) + 1 || level(n.hi) != level(id) + 1)
      return false;
  }
  return true;
}

lsbdd to_lsbdd(const obdd &b) {
  const auto vars = b.support();
  if (b.is_terminal(b.root()))
    return {b, vars};
  std::vector<std::size_t> idx(b.arity() + 1, 0);
  for (std::size_t k = 0; k < vars.size(); ++k)
    idx[vars[k]] = k;
  auto level = [&](node_id id) {
    return b.is_terminal(id) ? vars.size() : idx[b.node(id).var];
  };

  std::vector<bdd_node> out{{0, bdd_false, bdd_false},
                            {0, bdd_true, bdd_true}};
  std::map<std::pair<std::size_t, node_id>, node_id> padding;
  // Pass-through chain covering levels [from, to) above `target`.
  auto chain = [&](node_id target, std::size_t from, std::size_t to) {
    node_id cur = target;
    for (std::size_t k = to; k-- > from;) {
      auto [it, fresh] = padding.try_emplace({k, cur}, 0);
      if (fresh) {
        it->second = static_cast<node_id>(out.size());
        out.push_back({vars[k], cur, cur});
      }
      cur = it->second;
    }
    return cur;
  };

  std::vector<node_id> renumber(b.size());
  renumber[bdd_false] = bdd_false;
  renumber[bdd_true] = bdd_true;
  for (node_id id = 2; id < b.size(); ++id) {
    const auto &n = b.node(id);
    const std::size_t l = level(id);
    node_id lo = chain(renumber[n.lo], l + 1, level(n.lo));
    node_id hi = chain(renumber[n.hi], l + 1, level(n.hi));
    renumber[id] = static_cast<node_id>(out.size());
    out.push_back({n.var, lo, hi});
  }
  return {obdd(b.arity(), std::move(out), renumber[b.root()], b.order()),
          vars};
}

tensor_train encode_tt(const lsbdd &l) {
  const auto &g = l.graph;
  if (g.is_terminal(g.root()))
    throw error(errc::constant_function,
                "constant diagrams have no layers to encode");
  const auto &vars = l.vars;
  for (std::size_t k = 1; k < vars.size(); ++k)
    if (vars[k - 1] >= vars[k])
      throw error(errc::order_mismatch,
                  "tensor trains need the natural order on the support");
  if (!is_level_smooth(g, vars))
    throw error(errc::malformed_tt, "diagram is not level-wise smooth");

  const std::size_t m = vars.size();
  std::vector<std::size_t> idx(g.arity() + 1, 0);
  for (std::size_t k = 0; k < m; ++k)
    idx[vars[k]] = k;
  // Layer members in ascending arena id, and each node's position in its layer.
  std::vector<std::vector<node_id>> layers(m);
  std::vector<std::size_t> pos(g.size(), 0);
  for (node_id id = 2; id < g.size(); ++id) {
    auto &layer = layers[idx[g.node(id).var]];
    pos[id] = layer.size();
    layer.push_back(id);
  }
  if (layers[0].size() != 1 || layers[0][0] != g.root())
    throw error(errc::malformed_tt, "first layer must hold only the root");

  std::vector<ternary_core> cores;
  cores.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool last = i + 1 == m;
    const std::size_t rows = layers[i].size();
    const std::size_t cols = last ? 1 : layers[i + 1].size();
    std::vector<std::int8_t> e(2 * rows * cols, 0);
    for (std::size_t j = 0; j < rows; ++j) {
      const auto &n = g.node(layers[i][j]);
      node_id child[2] = {n.lo, n.hi};
      for (unsigned b = 0; b < 2; ++b) {
        if (last) {
          e[j * 2 + b] = child[b] == bdd_true ? 1 : 0;
        } else {
          e[(j * 2 + b) * cols + pos[child[b]]] = 1;
        }
      }
    }
    cores.emplace_back(rows, cols, std::move(e));
  }
  return {g.arity(), std::move(cores), vars};
}

tensor_train compile_obdd(const obdd &b) {
  if (b.is_terminal(b.root()))
    return constant_tt(b.arity(), b.root() == bdd_true);
  return encode_tt(to_lsbdd(b.is_reduced() ? b : reduce(b)));
}

} // namespace ttkc
