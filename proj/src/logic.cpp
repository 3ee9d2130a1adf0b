#include "ttkc/logic.hpp"

#include "ttkc/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

namespace ttkc {

literal from_dimacs(long value) {
  if (value == 0)
    throw error(errc::bad_literal, "literal 0 is reserved");
  return {static_cast<var_t>(std::labs(value)), value > 0};
}

void check_literals(std::span<const literal> lits, std::size_t arity) {
  std::set<var_t> seen;
  for (const auto &l : lits) {
    if (l.var < 1 || l.var > arity)
      throw error(errc::bad_literal,
                  "variable " + std::to_string(l.var) + " outside arity " +
                      std::to_string(arity));
    if (!seen.insert(l.var).second)
      throw error(errc::bad_literal,
                  "variable " + std::to_string(l.var) + " repeated");
  }
}

std::vector<literal> sorted_literals(std::span<const literal> lits) {
  std::vector<literal> out(lits.begin(), lits.end());
  std::sort(out.begin(), out.end(),
            [](const literal &a, const literal &b) { return a.var < b.var; });
  return out;
}

formula formula::constant(bool value) {
  formula f;
  f._kind = kind::constant;
  f._value = value;
  return f;
}

formula formula::variable(var_t v) {
  formula f;
  f._kind = kind::variable;
  f._var = v;
  return f;
}

formula formula::negation(formula g) {
  formula f;
  f._kind = kind::negation;
  f._args = std::make_shared<const std::pair<formula, formula>>(
      std::move(g), formula::constant(false));
  return f;
}

formula formula::binary(kind k, formula lhs, formula rhs) {
  formula f;
  f._kind = k;
  f._args = std::make_shared<const std::pair<formula, formula>>(
      std::move(lhs), std::move(rhs));
  return f;
}

var_t formula::max_var() const {
  switch (_kind) {
  case kind::constant: return 0;
  case kind::variable: return _var;
  case kind::negation: return operand().max_var();
  default: return std::max(lhs().max_var(), rhs().max_var());
  }
}

std::size_t formula::leaves() const {
  switch (_kind) {
  case kind::constant: return 0;
  case kind::variable: return 1;
  case kind::negation: return operand().leaves();
  default: return lhs().leaves() + rhs().leaves();
  }
}

bool formula::eval(std::span<const std::uint8_t> a) const {
  switch (_kind) {
  case kind::constant: return _value;
  case kind::variable:
    if (_var < 1 || _var > a.size())
      throw error(errc::unknown_variable, "x" + std::to_string(_var));
    return a[_var - 1] != 0;
  case kind::negation: return !operand().eval(a);
  case kind::conj: return lhs().eval(a) && rhs().eval(a);
  case kind::disj: return lhs().eval(a) || rhs().eval(a);
  case kind::exclusive: return lhs().eval(a) != rhs().eval(a);
  case kind::implies: return !lhs().eval(a) || rhs().eval(a);
  case kind::iff: return lhs().eval(a) == rhs().eval(a);
  }
  return false;
}

formula formula::relabel(std::span<const var_t> rename) const {
  switch (_kind) {
  case kind::constant: return *this;
  case kind::variable:
    if (_var < 1 || _var > rename.size())
      throw error(errc::unknown_variable, "x" + std::to_string(_var));
    return variable(rename[_var - 1]);
  case kind::negation: return negation(operand().relabel(rename));
  default: return binary(_kind, lhs().relabel(rename), rhs().relabel(rename));
  }
}

std::string formula::to_string() const {
  auto bin = [&](const char *op) {
    return "(" + lhs().to_string() + " " + op + " " + rhs().to_string() + ")";
  };
  switch (_kind) {
  case kind::constant: return _value ? "1" : "0";
  case kind::variable: return "x" + std::to_string(_var);
  case kind::negation: return "!" + operand().to_string();
  case kind::conj: return bin("&");
  case kind::disj: return bin("|");
  case kind::exclusive: return bin("^");
  case kind::implies: return bin("->");
  case kind::iff: return bin("<->");
  }
  return {};
}

namespace {

class parser {
public:
  explicit parser(std::string_view text) : _text(text) {}

  formula parse() {
    formula f = parse_iff();
    skip();
    if (_pos != _text.size())
      fail("unexpected '" + std::string(1, _text[_pos]) + "'");
    return f;
  }

private:
  std::string_view _text;
  std::size_t _pos = 0;

  [[noreturn]] void fail(const std::string &what) const {
    throw parse_error("formula", 1,
                      "column " + std::to_string(_pos + 1) + ": " + what);
  }

  void skip() {
    while (_pos < _text.size() &&
           std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool eat(std::string_view tok) {
    skip();
    if (_text.substr(_pos, tok.size()) == tok) {
      _pos += tok.size();
      return true;
    }
    return false;
  }

  formula parse_iff() {
    formula f = parse_implies();
    while (eat("<->"))
      f = formula::binary(formula::kind::iff, f, parse_implies());
    return f;
  }

  formula parse_implies() {
    formula f = parse_or();
    if (eat("->"))
      return formula::binary(formula::kind::implies, f, parse_implies());
    return f;
  }

  formula parse_or() {
    formula f = parse_xor();
    while (eat("|"))
      f = formula::binary(formula::kind::disj, f, parse_xor());
    return f;
  }

  formula parse_xor() {
    formula f = parse_and();
    while (eat("^"))
      f = formula::binary(formula::kind::exclusive, f, parse_and());
    return f;
  }

  formula parse_and() {
    formula f = parse_unary();
    while (eat("&"))
      f = formula::binary(formula::kind::conj, f, parse_unary());
    return f;
  }

  formula parse_unary() {
    if (eat("!"))
      return formula::negation(parse_unary());
    return parse_atom();
  }

  formula parse_atom() {
    skip();
    if (eat("(")) {
      formula f = parse_iff();
      if (!eat(")"))
        fail("expected ')'");
      return f;
    }
    if (_pos >= _text.size())
      fail("unexpected end of input");
    auto word_end = _pos;
    while (word_end < _text.size() &&
           std::isalnum(static_cast<unsigned char>(_text[word_end])))
      ++word_end;
    auto word = _text.substr(_pos, word_end - _pos);
    if (word == "1" || word == "true") {
      _pos = word_end;
      return formula::constant(true);
    }
    if (word == "0" || word == "false") {
      _pos = word_end;
      return formula::constant(false);
    }
    if (word.size() >= 2 && word[0] == 'x' &&
        std::all_of(word.begin() + 1, word.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      unsigned long v = std::stoul(std::string(word.substr(1)));
      if (v == 0)
        fail("variables are numbered from 1");
      _pos = word_end;
      return formula::variable(static_cast<var_t>(v));
    }
    fail(word.empty() ? "unexpected '" + std::string(1, _text[_pos]) + "'"
                      : "unknown token '" + std::string(word) + "'");
  }
};

} // namespace

formula parse_formula(std::string_view text) { return parser(text).parse(); }

} // namespace ttkc
