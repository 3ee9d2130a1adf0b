#include "support.hpp"

#include "ttkc/error.hpp"
#include "ttkc/obdd.hpp"
#include "ttkc/ops.hpp"

#include <doctest.h>

using namespace ttkc;
using namespace ttkc::testing;

namespace {

oracle::truth_table table_of(const obdd &b) {
  return oracle::tabulate(b.arity(), [&](auto x) { return b.eval(x); });
}

const char *at_least_two_false = "(!x1 & !x2) | (!x1 & !x3) | (!x2 & !x3)";

/// Random reduced OBDD from a random truth table
obdd random_obdd(rng_t &rng, std::size_t n) {
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  std::bernoulli_distribution p(0.5);
  for (auto &b : bits)
    b = p(rng);
  return from_truth_table(n, bits);
}

} // namespace

TEST_CASE("building reduced diagrams") {
  auto majority_false = build_from_formula(parse_formula(at_least_two_false), 3);
  CHECK(majority_false.is_reduced());
  CHECK(obdd_count(majority_false) == 4);
  CHECK(majority_false.internal_nodes() == 4);

  auto x = build_from_formula(parse_formula("x1 ^ x2"), 2);
  CHECK(x.internal_nodes() == 3);
  CHECK(x.size() == 5);
  CHECK(obdd_count(x) == 2);

  CHECK(obdd_count(build_from_formula(parse_formula("x1 | !x2"), 2)) == 3);
  CHECK(obdd_count(build_from_formula(parse_formula("x2"), 5)) == 16);
  CHECK(obdd_count(obdd::constant(4, true)) == 16);
  CHECK(obdd_count(obdd::constant(4, false)) == 0);

  CHECK_THROWS_AS(build_from_formula(parse_formula("x4"), 3), error);
}

TEST_CASE("diagram validation") {
  // Child after parent
  CHECK_THROWS_AS(obdd(2, {{}, {}, {1, 3, 1}, {2, 0, 1}}, 2), error);
  // Edge against the order
  CHECK_THROWS_AS(obdd(2, {{}, {}, {1, 0, 1}, {2, 2, 1}}, 3), error);
  CHECK_NOTHROW(obdd(2, {{}, {}, {1, 0, 1}, {2, 2, 1}}, 3, {2, 1}));
  // Unknown variable
  CHECK_THROWS_AS(obdd(2, {{}, {}, {3, 0, 1}}, 2), error);
  // Not a permutation
  CHECK_THROWS_AS(obdd(2, {{}, {}}, 0, {1, 1}), error);
  // Non-reduced diagrams are accepted and reduce to the same function
  obdd loose(2, {{}, {}, {2, 0, 1}, {2, 0, 1}, {1, 2, 3}}, 4);
  CHECK_FALSE(loose.is_reduced());
  auto tight = reduce(loose);
  CHECK(tight.is_reduced());
  CHECK(tight.internal_nodes() == 1);
  CHECK(table_of(tight) == table_of(loose));
}

TEST_CASE("apply and negate agree with the oracle") {
  rng_t rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto fa = random_formula(rng, n, 1 + trial % 6);
    auto fb = random_formula(rng, n, 1 + trial % 4);
    auto a = build_from_formula(fa, n), b = build_from_formula(fb, n);
    auto ta = oracle::tabulate(fa, n), tb = oracle::tabulate(fb, n);
    CHECK(a.is_reduced());
    CHECK(table_of(a) == ta);
    CHECK(obdd_count(a) == oracle::ct(ta));
    CHECK(table_of(apply(bool_op::conj, a, b)) == oracle::conj(ta, tb));
    CHECK(table_of(apply(bool_op::disj, a, b)) == oracle::disj(ta, tb));
    CHECK(table_of(negate(a)) == oracle::negate(ta));
    CHECK(reduce(a) == a);
    CHECK(from_truth_table(n, ta.bits) == a);
  }
}

TEST_CASE("non-natural orders") {
  auto f = parse_formula("(x1 & x3) | (x2 & x4)");
  std::vector<var_t> order{1, 3, 2, 4};
  auto b = build_from_formula(f, 4, order);
  CHECK(b.internal_nodes() == 4);
  CHECK(build_from_formula(f, 4).internal_nodes() == 6);
  CHECK(table_of(b) == oracle::tabulate(f, 4));
  CHECK(b.support() == order);
  CHECK_THROWS_AS(apply(bool_op::conj, b, build_from_formula(f, 4)), error);
  try {
    compile_obdd(b);
    FAIL("expected order mismatch");
  } catch (const error &e) {
    CHECK(e.code() == errc::order_mismatch);
  }
}

TEST_CASE("level-wise smooth conversion") {
  auto majority_false = build_from_formula(parse_formula(at_least_two_false), 3);
  auto l = to_lsbdd(majority_false);
  CHECK(is_level_smooth(l.graph, l.vars));
  CHECK_FALSE(is_level_smooth(majority_false, majority_false.support()));
  CHECK(l.vars == std::vector<var_t>{1, 2, 3});
  // Padding lands on the two terminal edges that skip x3.
  CHECK(l.size() == 6);
  CHECK(table_of(l.graph) == table_of(majority_false));

  rng_t rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto b = random_obdd(rng, n);
    if (b.is_terminal(b.root()))
      continue;
    auto ls = to_lsbdd(b);
    CHECK(is_level_smooth(ls.graph, ls.vars));
    CHECK(table_of(ls.graph) == table_of(b));
    const std::size_t v = ls.vars.size();
    if (v >= 2)
      CHECK(ls.size() <= b.size() * (v - 1));
    else
      CHECK(ls.size() == b.internal_nodes());
  }
}

TEST_CASE("layer-wise encoding") {
  auto majority_false = build_from_formula(parse_formula(at_least_two_false), 3);
  auto tt = encode_tt(to_lsbdd(majority_false));
  CHECK(tt.modes() == 3);
  CHECK(tt.ranks() == std::vector<std::size_t>{1, 2, 3, 1});
  CHECK(table_of(tt) == table_of(majority_false));

  try {
    encode_tt(to_lsbdd(obdd::constant(3, true)));
    FAIL("expected constant function error");
  } catch (const error &e) {
    CHECK(e.code() == errc::constant_function);
  }
  CHECK(va(compile_obdd(obdd::constant(3, true))));
  CHECK_FALSE(co(compile_obdd(obdd::constant(3, false))));

  rng_t rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto b = random_obdd(rng, n);
    auto tt = compile_obdd(b);
    CHECK(is_ternary(tt));
    CHECK(table_of(tt) == table_of(b));
    if (b.is_terminal(b.root()))
      continue;
    auto l = to_lsbdd(b);
    auto enc = encode_tt(l);
    CHECK(enc == tt);
    CHECK((enc.size() <= l.size() * l.size() || l.vars.size() == 1));
    CHECK(enc.map() == b.support());
    // Every slice row of an inner layer has exactly one 1.
    for (std::size_t i = 0; i + 1 < enc.modes(); ++i)
      for (std::size_t r = 0; r < enc.core(i).left_rank(); ++r)
        for (unsigned s = 0; s < 2; ++s) {
          int sum = 0;
          for (auto e : enc.core(i).row(r, s))
            sum += e;
          CHECK(sum == 1);
        }
  }
}

TEST_CASE("pipeline agrees with direct compilation") {
  rng_t rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto f = random_formula(rng, n, 1 + trial % 5);
    auto via = compile_obdd(build_from_formula(f, n));
    auto direct = formula_tt(f, n);
    CHECK(eq(via, direct));
    CHECK(table_of(via) == oracle::tabulate(f, n));
  }
}
