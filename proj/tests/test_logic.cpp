#include "support.hpp"

#include "ttkc/error.hpp"
#include "ttkc/logic.hpp"

#include <doctest.h>

using namespace ttkc;

namespace {

bool eval(const char *text, std::vector<std::uint8_t> x) {
  return parse_formula(text).eval(x);
}

std::size_t column_error(const char *text) {
  try {
    parse_formula(text);
  } catch (const parse_error &e) {
    return 1;
  }
  return 0;
}

} // namespace

TEST_CASE("precedence and associativity") {
  // & binds tighter than ^, which binds tighter than |
  CHECK(eval("x1 | x2 & x3", {1, 0, 0}));
  CHECK_FALSE(eval("(x1 | x2) & x3", {1, 0, 0}));
  CHECK(eval("x1 ^ x2 & x3", {1, 1, 0}));
  CHECK(eval("x1 ^ x2 | x3", {1, 1, 1}));
  // -> is right-associative: x1 -> (x2 -> x3)
  CHECK(eval("x1 -> x2 -> x3", {0, 1, 0}));
  CHECK_FALSE(eval("(x1 -> x2) -> x3", {0, 1, 0}));
  // <-> is loosest and left-associative
  CHECK(eval("x1 <-> x2 -> x3", {1, 0, 0}));
  CHECK(eval("!x1 & x2", {0, 1}));
  CHECK(eval("!!x1", {1}));
  CHECK(eval("true & 1", {0}));
  CHECK_FALSE(eval("false | 0", {0}));
}

TEST_CASE("printing round-trips") {
  testing::rng_t rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto f = testing::random_formula(rng, n, 1 + trial % 6);
    auto g = parse_formula(f.to_string());
    CHECK(oracle::tabulate(f, n) == oracle::tabulate(g, n));
    CHECK(g.leaves() == f.leaves());
  }
}

TEST_CASE("parse errors") {
  CHECK(column_error("x1 &") == 1);
  CHECK(column_error("x0") == 1);
  CHECK(column_error("(x1 | x2") == 1);
  CHECK(column_error("x1 x2") == 1);
  CHECK(column_error("y1") == 1);
  CHECK(column_error("") == 1);
  CHECK(column_error("x1 <- x2") == 1);
}

TEST_CASE("literals") {
  CHECK(from_dimacs(-3) == literal{3, false});
  CHECK(from_dimacs(2) == literal{2, true});
  std::vector<literal> ok{{2, true}, {1, false}};
  CHECK_NOTHROW(check_literals(ok, 2));
  CHECK(sorted_literals(ok).front().var == 1);
  std::vector<literal> dup{{1, true}, {1, true}};
  CHECK_THROWS_AS(check_literals(dup, 2), error);
  std::vector<literal> zero{{0, true}};
  CHECK_THROWS_AS(check_literals(zero, 2), error);
}

TEST_CASE("relabel") {
  auto f = parse_formula("x1 & !x3");
  std::vector<var_t> rename{3, 2, 1};
  auto g = f.relabel(rename);
  CHECK(g.eval(std::vector<std::uint8_t>{0, 0, 1}));
  CHECK(g.max_var() == 3);
}
