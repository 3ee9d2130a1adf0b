#include "support.hpp"

#include "ttkc/error.hpp"
#include "ttkc/kernels.hpp"
#include "ttkc/ops.hpp"
#include "ttkc/reference.hpp"

#include <doctest.h>

using namespace ttkc;
using namespace ttkc::testing;

namespace {

// x1 | !x2 as the two-core train A1 = [[1,0],[0,1]], A2 = [[1,0],[1,1]]
tensor_train example_tt() {
  return {2,
          {ternary_core(1, 2, {1, 0, 0, 1}), ternary_core(2, 1, {1, 0, 1, 1})},
          {1, 2}};
}

std::vector<std::uint8_t> bits(std::initializer_list<int> v) {
  return {v.begin(), v.end()};
}

void same_values(const tensor_train &a, const tensor_train &b) {
  REQUIRE(a.arity() == b.arity());
  for (std::size_t i = 0; i < (std::size_t{1} << a.arity()); ++i) {
    auto x = oracle::assignment_of(a.arity(), i);
    CHECK(evaluate_value(a, x) == evaluate_value(b, x));
  }
}

} // namespace

TEST_CASE("ternary core rejects bad shapes and entries") {
  CHECK_THROWS_AS(ternary_core(1, 2, {1, 0, 0}), error);
  CHECK_THROWS_AS(ternary_core(1, 1, {2, 0}), error);
  CHECK_THROWS_AS(ternary_core(0, 1, {}), error);
  auto c = ternary_core::identity(3);
  CHECK(c.size() == 18);
  CHECK(c.nonzeros() == 6);
  CHECK(c(2, 1, 2) == 1);
  CHECK(c(2, 1, 1) == 0);
}

TEST_CASE("tensor train validates map and chaining") {
  auto v = ternary_core::vector(0, 1);
  CHECK_THROWS_AS(tensor_train(2, {}, {}), error);
  CHECK_THROWS_AS(tensor_train(1, {v, v}, {1, 2}), error);
  CHECK_THROWS_AS(tensor_train(3, {v, v}, {2, 1}), error);
  CHECK_THROWS_AS(tensor_train(3, {v, v}, {2, 2}), error);
  CHECK_THROWS_AS(tensor_train(3, {v, v}, {0, 2}), error);
  CHECK_THROWS_AS(tensor_train(3, {v, v}, {1}), error);
  CHECK_THROWS_AS(
      tensor_train(2, {ternary_core(1, 2, {1, 0, 0, 1}), v}, {1, 2}), error);
  try {
    tensor_train(3, {v, v}, {2, 1});
  } catch (const error &e) {
    CHECK(e.code() == errc::malformed_tt);
  }
}

TEST_CASE("evaluate on the two-variable example") {
  auto tt = example_tt();
  CHECK(evaluate(tt, bits({1, 0})));
  CHECK_FALSE(evaluate(tt, bits({0, 1})));
  CHECK(table_of(tt).bits == std::vector<std::uint8_t>{1, 0, 1, 1});
  CHECK_THROWS_AS(evaluate(tt, bits({1})), error);

  tensor_train one(3, {ternary_core::vector(1, 1)}, {2});
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(evaluate(one, oracle::assignment_of(3, i)));

  auto doubled = tt_sum(tt, tt);
  try {
    evaluate(doubled, bits({0, 0}));
    FAIL("expected non-binary value");
  } catch (const error &e) {
    CHECK(e.code() == errc::non_binary_value);
  }
}

TEST_CASE("insert_identity keeps the function") {
  tensor_train not_x2(2, {ternary_core::vector(1, 0)}, {2});
  auto grown = insert_identity(not_x2, 0, 1);
  CHECK(grown.modes() == 2);
  CHECK(grown.map() == std::vector<var_t>{1, 2});
  same_values(grown, not_x2);

  auto f = example_tt();
  tensor_train f3(3, f.cores(), f.map());
  auto g = insert_identity(f3, 2, 3);
  CHECK(ct(f3) == 6);
  CHECK(ct(g) == 6);
  CHECK(oracle::ct(table_of(g)) == 6);
  same_values(g, f3);

  try {
    insert_identity(f3, 0, 3);
    FAIL("expected order violation");
  } catch (const error &e) {
    CHECK(e.code() == errc::position_violates_order);
  }
  CHECK_THROWS_AS(insert_identity(f3, 1, 2), error);
  CHECK_THROWS_AS(insert_identity(f3, 3, 3), error);
}

TEST_CASE("insert_identity preserves random trains") {
  rng_t rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 6;
    auto tt = random_tt(rng, n);
    if (tt.modes() == n)
      continue;
    var_t v = 1;
    while (tt.mode_of(v))
      ++v;
    std::size_t pos = 0;
    while (pos < tt.modes() && tt.map()[pos] < v)
      ++pos;
    auto g = insert_identity(tt, pos, v);
    CHECK(g.modes() == tt.modes() + 1);
    CHECK(g.rank() == tt.rank());
    same_values(g, tt);
  }
}

TEST_CASE("align unions the maps") {
  literal x1{1, true}, nx2{2, false};
  auto a = term_tt({&x1, 1}, 2);
  auto b = term_tt({&nx2, 1}, 2);
  auto [p, q] = align(a, b);
  CHECK(p.map() == std::vector<var_t>{1, 2});
  CHECK(q.map() == std::vector<var_t>{1, 2});
  same_values(p, a);
  same_values(q, b);

  auto [s, t] = align(a, a);
  CHECK(s == a);
  CHECK(t == a);

  CHECK_THROWS_AS(align(a, term_tt({&x1, 1}, 3)), error);

  rng_t rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto f = random_tt(rng, n);
    auto g = random_tt(rng, n);
    auto [x, y] = align(f, g);
    CHECK(is_aligned(x, y));
    CHECK(x.modes() <= f.modes() + g.modes());
    CHECK(x.rank() == f.rank());
    CHECK(y.rank() == g.rank());
    same_values(x, f);
    same_values(y, g);
  }
}

TEST_CASE("tt_sum is elementwise with additive ranks") {
  auto f = example_tt();
  auto twice = tt_sum(f, f);
  auto values = contract_all(twice);
  CHECK(values == std::vector<big_count>{2, 0, 2, 2});

  auto ones = ones_tt(2, {1, 2});
  auto neg = tt_sum(ones, negate_scalar(f));
  CHECK(table_of(neg).bits == std::vector<std::uint8_t>{0, 1, 0, 0});

  tensor_train zero(2, {ternary_core::vector(0, 0), ternary_core::vector(0, 0)},
                    {1, 2});
  same_values(tt_sum(zero, f), f);

  literal x1{1, true};
  CHECK_THROWS_AS(tt_sum(f, term_tt({&x1, 1}, 2)), error);

  rng_t rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto map = random_map(rng, n);
    auto a = random_tt(rng, n, map);
    auto b = random_tt(rng, n, map);
    if (map.size() == 1) {
      // Entrywise; may leave the ternary range.
      try {
        auto s = tt_sum(a, b);
        CHECK(is_ternary(s));
      } catch (const error &e) {
        CHECK(e.code() == errc::non_ternary);
      }
      continue;
    }
    auto s = tt_sum(a, b);
    auto ra = a.ranks(), rb = b.ranks(), rs = s.ranks();
    for (std::size_t i = 1; i < map.size(); ++i)
      CHECK(rs[i] == ra[i] + rb[i]);
    CHECK(is_ternary(s));
    auto va_ = contract_all(a), vb = contract_all(b), vs = contract_all(s);
    for (std::size_t k = 0; k < vs.size(); ++k)
      CHECK(vs[k] == va_[k] + vb[k]);
  }
}

TEST_CASE("tt_hadamard is elementwise with multiplicative ranks") {
  auto f = example_tt();
  auto ones = ones_tt(2, {1, 2});
  same_values(tt_hadamard(f, ones), f);
  auto not_f = tt_sum(ones, negate_scalar(f));
  auto zero = tt_hadamard(f, not_f);
  for (const auto &v : contract_all(zero))
    CHECK(v == 0);

  literal x1{1, true}, nx2{2, false};
  auto [a, b] = align(term_tt({&x1, 1}, 2), term_tt({&nx2, 1}, 2));
  CHECK(ct(tt_hadamard(a, b)) == 1);

  rng_t rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto map = random_map(rng, n);
    auto p = random_tt(rng, n, map);
    auto q = random_tt(rng, n, map);
    auto h = tt_hadamard(p, q);
    CHECK(h == reference::tt_hadamard(p, q));
    auto rp = p.ranks(), rq = q.ranks(), rh = h.ranks();
    for (std::size_t i = 0; i < rh.size(); ++i)
      CHECK(rh[i] == rp[i] * rq[i]);
    CHECK(is_ternary(h));
    auto vp = contract_all(p), vq = contract_all(q), vh = contract_all(h);
    for (std::size_t k = 0; k < vh.size(); ++k)
      CHECK(vh[k] == vp[k] * vq[k]);
  }
}

TEST_CASE("tt_inner matches the serial route and the expansion") {
  auto f = example_tt();
  auto ones = ones_tt(2, {1, 2});
  CHECK(tt_inner(f, ones) == 3);
  CHECK(tt_inner(f, f) == tt_inner(f, ones));
  tensor_train zero(2, {ternary_core::vector(0, 0), ternary_core::vector(0, 0)},
                    {1, 2});
  CHECK(tt_inner(zero, f) == 0);

  auto h3 = hwb_tt(3);
  big_count models =
      oracle::ct(oracle::tabulate(3, [](auto x) { return hwb_value(x); }));
  CHECK(models == 4);
  CHECK(tt_inner(h3, ones_tt(3, {1, 2, 3})) == models);

  rng_t rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 10;
    auto map = random_map(rng, n);
    auto a = random_tt(rng, n, map, 4);
    auto b = random_tt(rng, n, map, 4);
    big_count want = 0;
    auto va_ = contract_all(a), vb = contract_all(b);
    for (std::size_t k = 0; k < va_.size(); ++k)
      want += va_[k] * vb[k];
    CHECK(tt_inner(a, b) == want);
    CHECK(reference::tt_inner(a, b) == want);
  }
}

TEST_CASE("parallel contraction matches serial evaluation") {
  rng_t rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 12;
    auto tt = random_tt(rng, n, 4);
    CHECK(contract_all(tt) == reference::contract_all(tt));
    auto x = oracle::assignment_of(n, trial % (std::size_t{1} << n));
    CHECK(evaluate_value(tt, x) == reference::evaluate_value(tt, x));
  }
}

TEST_CASE("negate_scalar and ones") {
  auto ones = ones_tt(2, {1, 2});
  for (const auto &v : contract_all(negate_scalar(ones)))
    CHECK(v == -1);
  auto f = example_tt();
  CHECK(negate_scalar(negate_scalar(f)) == f);
  CHECK(ct(tt_sum(ones, negate_scalar(f))) == 1);
  CHECK(ct(ones) == 4);
  CHECK(ct(ones_tt(3, {2})) == 8);
}

TEST_CASE("size lower bound holds") {
  rng_t rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    auto tt = random_tt(rng, 1 + trial % 9, 5);
    CHECK(tt.size() >= tt.rank() + tt.modes());
  }
  auto h = hwb_tt(6);
  CHECK(h.size() >= h.rank() + h.modes());
}

TEST_CASE("evaluation falls back to big integers on overflow") {
  // Rank-2 cores [[1,1],[1,1]] double the value each step: 2^70 after 71.
  const std::size_t m = 72;
  std::vector<ternary_core> cores;
  cores.emplace_back(1, 2, std::vector<std::int8_t>{1, 1, 1, 1});
  for (std::size_t i = 1; i + 1 < m; ++i)
    cores.emplace_back(2, 2, std::vector<std::int8_t>(8, 1));
  cores.emplace_back(2, 1, std::vector<std::int8_t>{1, 1, 1, 1});
  std::vector<var_t> map(m);
  for (std::size_t i = 0; i < m; ++i)
    map[i] = static_cast<var_t>(i + 1);
  tensor_train tt(m, std::move(cores), map);
  std::vector<std::uint8_t> x(m, 0);
  CHECK(evaluate_value(tt, x) == pow2(m - 1));
  CHECK(reference::evaluate_value(tt, x) == pow2(m - 1));
  CHECK(tt_inner(tt, ones_tt(m, map)) == pow2(m) * pow2(m - 1));
}
