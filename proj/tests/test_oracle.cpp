#include "support.hpp"

#include "ttkc/error.hpp"
#include "ttkc/oracle.hpp"

#include <doctest.h>

using namespace ttkc;
using namespace ttkc::testing;

TEST_CASE("expansion") {
  tensor_train eq1(2,
                   {ternary_core(1, 2, {1, 0, 0, 1}),
                    ternary_core(2, 1, {1, 0, 1, 1})},
                   {1, 2});
  auto e = oracle::expand(eq1);
  CHECK(e.binary);
  CHECK(e.table.bits == std::vector<std::uint8_t>{1, 0, 1, 1});
  CHECK(oracle::expand(ones_tt(2, {1, 2})).table.bits ==
        std::vector<std::uint8_t>{1, 1, 1, 1});

  auto doubled = tt_sum(eq1, eq1);
  CHECK_FALSE(oracle::expand(doubled).binary);

  auto big = ones_tt(25, {1});
  try {
    oracle::expand(big);
    FAIL("expected arity guard");
  } catch (const error &e) {
    CHECK(e.code() == errc::arity_too_large);
  }
}

TEST_CASE("truth table operations") {
  auto f = oracle::tabulate(parse_formula("x1 | !x2"), 2);
  CHECK(f.bits == std::vector<std::uint8_t>{1, 0, 1, 1});
  CHECK(oracle::ct(f) == 3);
  CHECK(oracle::eq(f, f));
  auto g = oracle::tabulate(parse_formula("x1 & !x2"), 2);
  std::vector<var_t> x1{1};
  CHECK(oracle::fo(g, x1) == oracle::tabulate(parse_formula("!x2"), 2));
  CHECK(oracle::se(g, f));
  CHECK_FALSE(oracle::se(f, g));
  CHECK(oracle::me(f).size() == 3);
  CHECK_THROWS_AS(oracle::ct(oracle::truth_table{21, {}}), error);
  CHECK_THROWS_AS(oracle::tabulate(parse_formula("x3"), 2), error);
}

TEST_CASE("matrix rank") {
  using oracle::matrix_rank;
  CHECK(matrix_rank({1, 2, 2, 4}, 2, 2) == 1);
  CHECK(matrix_rank({1, 2, 3, 4}, 2, 2) == 2);
  CHECK(matrix_rank({0, 0, 0, 0, 0, 0}, 2, 3) == 0);
  CHECK(matrix_rank({1, 1, 0, 1, 0, 1, 0, 1, -1}, 3, 3) == 2);
  CHECK(matrix_rank({2, 4, 6, 1, 2, 3, 0, 0, 1}, 3, 3) == 2);

  // Rank of random 0/1 matrices against a floating-point-free reference:
  // row reduction over the rationals done with mpq.
  rng_t rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + trial % 9, cols = 1 + (trial / 3) % 9;
    std::vector<big_count> a(rows * cols);
    for (auto &x : a)
      x = static_cast<long>(rng() % 3) - 1;
    std::vector<rational> q(a.begin(), a.end());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = rank;
      while (p < rows && q[p * cols + c] == 0)
        ++p;
      if (p == rows)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(q[p * cols + j], q[rank * cols + j]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == rank || q[i * cols + c] == 0)
          continue;
        rational f = q[i * cols + c] / q[rank * cols + c];
        for (std::size_t j = 0; j < cols; ++j)
          q[i * cols + j] -= f * q[rank * cols + j];
      }
      ++rank;
    }
    CHECK(matrix_rank(a, rows, cols) == rank);
  }
}

TEST_CASE("unfolding rank") {
  auto eq4 = cnf_tt(equality_cnf(4), 8);
  CHECK(oracle::unfolding_rank(eq4, 4) == 16);
  std::vector<literal> t{{1, true}, {3, false}, {4, true}};
  auto term = term_tt(t, 4);
  for (std::size_t k = 0; k <= term.modes(); ++k)
    CHECK(oracle::unfolding_rank(term, k) == 1);
  auto h6 = hwb_tt(6);
  CHECK(oracle::unfolding_rank(h6, 3) <= 12);

  rng_t rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 9;
    auto f = formula_tt(random_formula(rng, n, 1 + trial % 5), n);
    auto r = f.ranks();
    for (std::size_t k = 0; k <= f.modes(); ++k)
      CHECK(oracle::unfolding_rank(f, k) <= r[k]);
  }
  CHECK_THROWS_AS(oracle::unfolding_rank(h6, 7), error);
}
