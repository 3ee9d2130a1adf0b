#include "ttkc/io.hpp"

#include "ttkc/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ttkc {
namespace {

struct token {
  std::string text;
  std::size_t line;
};

/// Splits input into whitespace-separated tokens, dropping `#` comments.
class token_stream {
public:
  token_stream(std::istream &in, std::string source)
      : _source(std::move(source)) {
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      std::istringstream words(line);
      std::string w;
      while (words >> w)
        _tokens.push_back({w, no});
    }
    _last_line = no;
  }

  bool done() const { return _pos == _tokens.size(); }
  std::size_t line() const {
    return done() ? _last_line : _tokens[_pos].line;
  }
  const std::string &peek() const { return _tokens[_pos].text; }

  [[noreturn]] void fail(const std::string &what) const {
    throw parse_error(_source, line(), what);
  }
  [[noreturn]] void fail_at(std::size_t line, const std::string &what) const {
    throw parse_error(_source, line, what);
  }

  const token &next(const char *expecting) {
    if (done())
      fail(std::string("unexpected end of input, expected ") + expecting);
    return _tokens[_pos++];
  }

  void keyword(const char *word) {
    const auto &t = next(word);
    if (t.text != word)
      fail_at(t.line, "expected '" + std::string(word) + "', got '" + t.text +
                          "'");
  }

  template <class Int> Int integer(const char *what) {
    const auto &t = next(what);
    Int v{};
    auto [p, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      fail_at(t.line, std::string("expected ") + what + ", got '" + t.text +
                          "'");
    return v;
  }

  std::size_t count(const char *what) {
    std::size_t line_no = line();
    long long v = integer<long long>(what);
    if (v < 0)
      fail_at(line_no, std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
  }

private:
  std::string _source;
  std::vector<token> _tokens;
  std::size_t _pos = 0;
  std::size_t _last_line = 0;
};

std::ifstream open_in(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error(path, 0, "cannot open file");
  return in;
}

std::ofstream open_out(const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw error(errc::parse_error, path + ": cannot write file");
  return out;
}

} // namespace

void write_tt(std::ostream &out, const tensor_train &tt) {
  out << "tt 1\narity " << tt.arity() << "\nmodes " << tt.modes() << "\nmap";
  for (var_t v : tt.map())
    out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < tt.modes(); ++i) {
    const auto &c = tt.core(i);
    out << "core " << i + 1 << ' ' << c.left_rank() << " 2 " << c.right_rank()
        << '\n';
    for (std::size_t l = 0; l < c.left_rank(); ++l)
      for (unsigned b = 0; b < 2; ++b) {
        auto row = c.row(l, b);
        for (std::size_t r = 0; r < row.size(); ++r)
          out << (r ? " " : "") << int(row[r]);
        out << '\n';
      }
  }
}

tensor_train read_tt(std::istream &in, const std::string &source) {
  token_stream ts(in, source);
  ts.keyword("tt");
  std::size_t version_line = ts.line();
  if (ts.integer<int>("format version") != 1)
    ts.fail_at(version_line, "unsupported tt format version");
  ts.keyword("arity");
  const std::size_t n = ts.count("arity");
  ts.keyword("modes");
  std::size_t modes_line = ts.line();
  const std::size_t m = ts.count("mode count");
  if (m < 1 || m > n)
    ts.fail_at(modes_line, "mode count must lie in [1, arity]");

  ts.keyword("map");
  std::vector<var_t> map;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t line = ts.line();
    long long v = ts.integer<long long>("variable index");
    if (v < 1 || static_cast<std::size_t>(v) > n)
      ts.fail_at(line, "map entry x" + std::to_string(v) + " outside [1, " +
                           std::to_string(n) + "]");
    if (!map.empty() && static_cast<var_t>(v) <= map.back())
      ts.fail_at(line, "map must be strictly increasing");
    map.push_back(static_cast<var_t>(v));
  }

  std::vector<ternary_core> cores;
  std::size_t prev_right = 1;
  for (std::size_t i = 0; i < m; ++i) {
    ts.keyword("core");
    std::size_t header = ts.line();
    if (ts.count("core index") != i + 1)
      ts.fail_at(header, "cores must be numbered 1.." + std::to_string(m) +
                             " in order");
    std::size_t r = ts.count("left rank");
    if (ts.count("mode size") != 2)
      ts.fail_at(header, "mode size must be 2");
    std::size_t q = ts.count("right rank");
    if (r == 0 || q == 0)
      ts.fail_at(header, "ranks must be positive");
    if (r != prev_right)
      ts.fail_at(header, "left rank " + std::to_string(r) +
                             " does not chain with previous right rank " +
                             std::to_string(prev_right));
    if (i + 1 == m && q != 1)
      ts.fail_at(header, "last core must have right rank 1");
    std::vector<std::int8_t> e(2 * r * q);
    for (auto &x : e) {
      std::size_t line = ts.line();
      int v = ts.integer<int>("core entry");
      if (v < -1 || v > 1)
        ts.fail_at(line, "core entry " + std::to_string(v) +
                             " outside {-1, 0, 1}");
      x = static_cast<std::int8_t>(v);
    }
    cores.emplace_back(r, q, std::move(e));
    prev_right = q;
  }
  if (!ts.done())
    ts.fail("trailing content after last core");
  try {
    return {n, std::move(cores), std::move(map)};
  } catch (const error &e) {
    ts.fail(e.what());
  }
}

void write_bdd(std::ostream &out, const obdd &b) {
  out << "bdd 1\narity " << b.arity() << '\n';
  if (!b.natural_order()) {
    out << "order";
    for (var_t v : b.order())
      out << ' ' << v;
    out << '\n';
  }
  out << "root " << b.root() << '\n';
  for (node_id id = 2; id < b.size(); ++id) {
    const auto &n = b.node(id);
    out << "node " << id << ' ' << n.var << ' ' << n.lo << ' ' << n.hi << '\n';
  }
}

obdd read_bdd(std::istream &in, const std::string &source) {
  token_stream ts(in, source);
  ts.keyword("bdd");
  std::size_t version_line = ts.line();
  if (ts.integer<int>("format version") != 1)
    ts.fail_at(version_line, "unsupported bdd format version");
  ts.keyword("arity");
  const std::size_t n = ts.count("arity");
  std::vector<var_t> order;
  if (!ts.done() && ts.peek() == "order") {
    ts.next("order");
    std::size_t line = ts.line();
    for (std::size_t k = 0; k < n; ++k)
      order.push_back(static_cast<var_t>(ts.count("variable index")));
    try {
      obdd probe(n, {{}, {}}, bdd_false, order);
    } catch (const error &e) {
      ts.fail_at(line, e.what());
    }
  }
  ts.keyword("root");
  std::size_t root_line = ts.line();
  const auto root = static_cast<node_id>(ts.count("root id"));

  struct raw {
    var_t var;
    node_id lo, hi;
    std::size_t line;
  };
  std::map<node_id, raw> table;
  while (!ts.done()) {
    ts.keyword("node");
    std::size_t line = ts.line();
    auto id = static_cast<node_id>(ts.count("node id"));
    auto var = static_cast<var_t>(ts.count("variable"));
    auto lo = static_cast<node_id>(ts.count("lo id"));
    auto hi = static_cast<node_id>(ts.count("hi id"));
    if (id <= bdd_true)
      ts.fail_at(line, "ids 0 and 1 are reserved for terminals");
    if (var < 1 || var > n)
      ts.fail_at(line, "variable x" + std::to_string(var) + " outside [1, " +
                           std::to_string(n) + "]");
    if (!table.emplace(id, raw{var, lo, hi, line}).second)
      ts.fail_at(line, "duplicate node id " + std::to_string(id));
  }

  // Children-first renumbering from the root, LO subtree before HI.
  std::vector<bdd_node> nodes{{0, bdd_false, bdd_false},
                              {0, bdd_true, bdd_true}};
  std::map<node_id, node_id> renumber{{bdd_false, bdd_false},
                                      {bdd_true, bdd_true}};
  std::map<node_id, bool> on_stack;
  auto resolve = [&](node_id id, std::size_t line) -> const raw & {
    auto it = table.find(id);
    if (it == table.end())
      ts.fail_at(line, "unknown node id " + std::to_string(id));
    return it->second;
  };
  std::vector<std::pair<node_id, bool>> stack{{root, false}};
  if (root > bdd_true)
    resolve(root, root_line);
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (renumber.count(id))
      continue;
    const raw &r = table.at(id);
    if (expanded) {
      on_stack[id] = false;
      renumber[id] = static_cast<node_id>(nodes.size());
      nodes.push_back({r.var, renumber.at(r.lo), renumber.at(r.hi)});
      continue;
    }
    if (on_stack[id])
      ts.fail_at(r.line, "cycle through node " + std::to_string(id));
    on_stack[id] = true;
    stack.push_back({id, true});
    for (node_id c : {r.hi, r.lo}) {
      if (renumber.count(c))
        continue;
      if (on_stack[c])
        ts.fail_at(r.line, "cycle through node " + std::to_string(c));
      resolve(c, r.line);
      stack.push_back({c, false});
    }
  }
  try {
    return {n, std::move(nodes), renumber.at(root), std::move(order)};
  } catch (const error &e) {
    ts.fail(e.what());
  }
}

cnf read_dimacs(std::istream &in, const std::string &source) {
  cnf out;
  bool header = false;
  std::size_t declared = 0;
  clause current;
  std::size_t current_line = 0;
  std::string line;
  std::size_t no = 0;
  auto fail = [&](const std::string &what) -> void {
    throw parse_error(source, no, what);
  };
  while (std::getline(in, line)) {
    ++no;
    std::istringstream words(line);
    std::string w;
    if (!(words >> w) || w == "c" || w[0] == 'c')
      continue;
    if (w == "%")
      break;
    if (w == "p") {
      if (header)
        fail("duplicate problem line");
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (!(words >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 ||
          clauses < 0)
        fail("expected 'p cnf <vars> <clauses>'");
      out.arity = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(clauses);
      header = true;
      continue;
    }
    if (!header)
      fail("clause before 'p cnf' header");
    words.clear();
    words.str(line);
    while (words >> w) {
      long v = 0;
      auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc() || p != w.data() + w.size())
        fail("bad literal '" + w + "'");
      if (v == 0) {
        out.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      literal lit = from_dimacs(v);
      if (lit.var > out.arity)
        fail("variable " + std::to_string(lit.var) + " exceeds declared " +
             std::to_string(out.arity));
      for (const auto &other : current) {
        if (other.var != lit.var)
          continue;
        fail(other.positive == lit.positive
                 ? "repeated literal " + w + " in clause"
                 : "complementary literals on variable " +
                       std::to_string(lit.var) + " in clause");
      }
      if (current.empty())
        current_line = no;
      current.push_back(lit);
    }
  }
  if (!header)
    throw parse_error(source, no, "missing 'p cnf' header");
  if (!current.empty())
    throw parse_error(source, current_line, "clause not terminated by 0");
  if (out.clauses.size() != declared)
    throw parse_error(source, no,
                      "header declares " + std::to_string(declared) +
                          " clauses, found " +
                          std::to_string(out.clauses.size()));
  return out;
}

weight_spec read_weights(std::istream &in, std::size_t arity,
                         const std::string &source) {
  weight_spec w(arity);
  std::vector<bool> seen(arity, false);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream words(line);
    std::string var, neg, pos, extra;
    if (!(words >> var))
      continue;
    if (!(words >> neg >> pos) || (words >> extra))
      throw parse_error(source, no, "expected '<var> <w-> <w+>'");
    long long v = 0;
    auto [p, ec] = std::from_chars(var.data(), var.data() + var.size(), v);
    if (ec != std::errc() || p != var.data() + var.size() || v < 1 ||
        static_cast<std::size_t>(v) > arity)
      throw parse_error(source, no, "variable '" + var + "' outside [1, " +
                                        std::to_string(arity) + "]");
    if (seen[v - 1])
      throw parse_error(source, no, "duplicate weights for x" + var);
    seen[v - 1] = true;
    try {
      w[v - 1] = {parse_rational(neg), parse_rational(pos)};
    } catch (const std::invalid_argument &e) {
      throw parse_error(source, no, e.what());
    }
    if (w[v - 1].first < 0 || w[v - 1].second < 0)
      throw parse_error(source, no, "weights must be nonnegative");
  }
  for (std::size_t j = 0; j < arity; ++j)
    if (!seen[j])
      throw parse_error(source, no,
                        "missing weights for x" + std::to_string(j + 1));
  return w;
}

std::vector<var_t> read_order(std::istream &in, std::size_t arity,
                              const std::string &source) {
  token_stream ts(in, source);
  std::vector<var_t> order;
  std::vector<bool> seen(arity + 1, false);
  while (!ts.done()) {
    std::size_t line = ts.line();
    std::size_t v = ts.count("variable index");
    if (v < 1 || v > arity)
      ts.fail_at(line, "variable " + std::to_string(v) + " outside [1, " +
                           std::to_string(arity) + "]");
    if (seen[v])
      ts.fail_at(line, "variable " + std::to_string(v) + " listed twice");
    seen[v] = true;
    order.push_back(static_cast<var_t>(v));
  }
  if (order.size() != arity)
    ts.fail("order lists " + std::to_string(order.size()) + " of " +
            std::to_string(arity) + " variables");
  return order;
}

tensor_train load_tt(const std::string &path) {
  auto in = open_in(path);
  return read_tt(in, path);
}

void save_tt(const std::string &path, const tensor_train &tt) {
  auto out = open_out(path);
  write_tt(out, tt);
}

obdd load_bdd(const std::string &path) {
  auto in = open_in(path);
  return read_bdd(in, path);
}

void save_bdd(const std::string &path, const obdd &b) {
  auto out = open_out(path);
  write_bdd(out, b);
}

cnf load_dimacs(const std::string &path) {
  auto in = open_in(path);
  return read_dimacs(in, path);
}

weight_spec load_weights(const std::string &path, std::size_t arity) {
  auto in = open_in(path);
  return read_weights(in, arity, path);
}

std::vector<var_t> load_order(const std::string &path, std::size_t arity) {
  auto in = open_in(path);
  return read_order(in, arity, path);
}

} // namespace ttkc
