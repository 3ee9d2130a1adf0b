#include "ttkc/reference.hpp"

#include "ttkc/error.hpp"

namespace ttkc::reference {

big_count evaluate_value(const tensor_train &tt,
                         std::span<const std::uint8_t> assignment) {
  if (assignment.size() != tt.arity())
    throw error(errc::arity_mismatch, "assignment length differs from arity");
  std::vector<big_count> v{big_count(1)};
  for (std::size_t i = 0; i < tt.modes(); ++i) {
    const auto &core = tt.core(i);
    unsigned b = assignment[tt.map()[i] - 1] ? 1u : 0u;
    std::vector<big_count> next(core.right_rank(), big_count(0));
    for (std::size_t c = 0; c < core.right_rank(); ++c)
      for (std::size_t l = 0; l < core.left_rank(); ++l)
        next[c] += v[l] * core(l, b, c);
    v = std::move(next);
  }
  return v[0];
}

std::vector<big_count> contract_all(const tensor_train &tt) {
  const std::size_t m = tt.modes();
  std::vector<big_count> out(std::size_t{1} << m);
  std::vector<std::uint8_t> bits(tt.arity(), 0);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    for (std::size_t i = 0; i < m; ++i)
      bits[tt.map()[i] - 1] = (idx >> (m - 1 - i)) & 1u;
    out[idx] = evaluate_value(tt, bits);
  }
  return out;
}

tensor_train tt_hadamard(const tensor_train &a, const tensor_train &b) {
  if (a.arity() != b.arity() || a.map() != b.map())
    throw error(errc::not_aligned, "operands must be aligned");
  std::vector<ternary_core> cores;
  for (std::size_t i = 0; i < a.modes(); ++i) {
    const auto &ca = a.core(i);
    const auto &cb = b.core(i);
    std::size_t rows = ca.left_rank() * cb.left_rank();
    std::size_t cols = ca.right_rank() * cb.right_rank();
    std::vector<std::int8_t> e(2 * rows * cols);
    for (std::size_t l = 0; l < ca.left_rank(); ++l)
      for (std::size_t k = 0; k < cb.left_rank(); ++k)
        for (unsigned x = 0; x < 2; ++x)
          for (std::size_t lc = 0; lc < ca.right_rank(); ++lc)
            for (std::size_t kc = 0; kc < cb.right_rank(); ++kc) {
              std::size_t row = l * cb.left_rank() + k;
              std::size_t col = lc * cb.right_rank() + kc;
              e[(row * 2 + x) * cols + col] =
                  static_cast<std::int8_t>(ca(l, x, lc) * cb(k, x, kc));
            }
    cores.emplace_back(rows, cols, std::move(e));
  }
  return {a.arity(), std::move(cores), a.map()};
}

big_count tt_inner(const tensor_train &a, const tensor_train &b) {
  if (a.arity() != b.arity() || a.map() != b.map())
    throw error(errc::not_aligned, "operands must be aligned");
  std::vector<big_count> v{big_count(1)};
  for (std::size_t i = 0; i < a.modes(); ++i) {
    const auto &ca = a.core(i);
    const auto &cb = b.core(i);
    const std::size_t q = cb.left_rank();
    const std::size_t cols = ca.right_rank() * cb.right_rank();
    // m[(l,k),(lc,kc)] = sum_x A(l,x,lc) B(k,x,kc), entries in [-2, 2]
    std::vector<int> mat(v.size() * cols, 0);
    for (std::size_t l = 0; l < ca.left_rank(); ++l)
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t lc = 0; lc < ca.right_rank(); ++lc)
          for (std::size_t kc = 0; kc < cb.right_rank(); ++kc) {
            int s = 0;
            for (unsigned x = 0; x < 2; ++x)
              s += ca(l, x, lc) * cb(k, x, kc);
            mat[(l * q + k) * cols + lc * cb.right_rank() + kc] = s;
          }
    std::vector<big_count> next(cols, big_count(0));
    for (std::size_t row = 0; row < v.size(); ++row)
      for (std::size_t c = 0; c < cols; ++c)
        if (mat[row * cols + c] != 0)
          next[c] += v[row] * mat[row * cols + c];
    v = std::move(next);
  }
  return v[0];
}

} // namespace ttkc::reference
