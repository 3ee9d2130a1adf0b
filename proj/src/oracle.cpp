#include "ttkc/oracle.hpp"

#include "ttkc/error.hpp"
#include "ttkc/kernels.hpp"

#include <algorithm>
#include <string>

namespace ttkc::oracle {
namespace {

void guard_arity(std::size_t n, std::size_t limit) {
  if (n > limit)
    throw error(errc::arity_too_large,
                "arity " + std::to_string(n) + " exceeds oracle limit " +
                    std::to_string(limit));
}

void same_arity(const truth_table &f, const truth_table &g) {
  if (f.arity != g.arity)
    throw error(errc::arity_mismatch, "truth tables differ in arity");
}

std::size_t bit_of(std::size_t arity, var_t v) { return arity - v; }

} // namespace

std::size_t truth_table::index_of(std::span<const std::uint8_t> a) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < arity; ++j)
    idx = (idx << 1) | (a[j] ? 1u : 0u);
  return idx;
}

bool truth_table::at(std::span<const std::uint8_t> a) const {
  return bits[index_of(a)] != 0;
}

std::vector<std::uint8_t> assignment_of(std::size_t arity, std::size_t index) {
  std::vector<std::uint8_t> a(arity);
  for (std::size_t j = 0; j < arity; ++j)
    a[j] = (index >> (arity - 1 - j)) & 1u;
  return a;
}

truth_table
tabulate(std::size_t arity,
         const std::function<bool(std::span<const std::uint8_t>)> &fn) {
  guard_arity(arity, max_table_arity);
  truth_table t{arity, std::vector<std::uint8_t>(std::size_t{1} << arity)};
  for (std::size_t idx = 0; idx < t.bits.size(); ++idx)
    t.bits[idx] = fn(assignment_of(arity, idx)) ? 1 : 0;
  return t;
}

truth_table tabulate(const formula &f, std::size_t arity) {
  if (f.max_var() > arity)
    throw error(errc::unknown_variable,
                "x" + std::to_string(f.max_var()) + " outside arity " +
                    std::to_string(arity));
  return tabulate(arity, [&](std::span<const std::uint8_t> a) {
    return f.eval(a);
  });
}

expansion expand(const tensor_train &tt) {
  const std::size_t n = tt.arity();
  guard_arity(n, max_table_arity);
  const std::size_t m = tt.modes();
  std::vector<std::int64_t> values;
  if (auto fast = contract_all_i64(tt)) {
    values = std::move(*fast);
  } else {
    auto slow = contract_all(tt);
    values.resize(slow.size());
    for (std::size_t i = 0; i < slow.size(); ++i)
      values[i] = (slow[i] == 0 || slow[i] == 1) ? slow[i].get_si() : 2;
  }
  expansion out{{n, std::vector<std::uint8_t>(std::size_t{1} << n)}, true};
  for (auto v : values)
    if (v != 0 && v != 1)
      out.binary = false;
  std::vector<std::size_t> shifts(m);
  for (std::size_t i = 0; i < m; ++i)
    shifts[i] = bit_of(n, tt.map()[i]);
  const long total = static_cast<long>(out.table.bits.size());
#pragma omp parallel for schedule(static) if (total > 4096)
  for (long idx = 0; idx < total; ++idx) {
    std::size_t mode_idx = 0;
    for (std::size_t i = 0; i < m; ++i)
      mode_idx = (mode_idx << 1) |
                 ((static_cast<std::size_t>(idx) >> shifts[i]) & 1u);
    out.table.bits[static_cast<std::size_t>(idx)] =
        values[mode_idx] == 1 ? 1 : 0;
  }
  return out;
}

big_count ct(const truth_table &f) {
  guard_arity(f.arity, max_op_arity);
  unsigned long n = 0;
  for (auto b : f.bits)
    n += b;
  return big_count(n);
}

bool co(const truth_table &f) { return ct(f) != 0; }

bool va(const truth_table &f) { return ct(f) == pow2(f.arity); }

bool eq(const truth_table &f, const truth_table &g) {
  same_arity(f, g);
  return f.bits == g.bits;
}

bool se(const truth_table &f, const truth_table &g) {
  same_arity(f, g);
  for (std::size_t i = 0; i < f.bits.size(); ++i)
    if (f.bits[i] && !g.bits[i])
      return false;
  return true;
}

namespace {
bool satisfies_clause(std::span<const std::uint8_t> a,
                      std::span<const literal> c) {
  for (const auto &lit : c)
    if ((a[lit.var - 1] != 0) == lit.positive)
      return true;
  return false;
}
bool satisfies_term(std::span<const std::uint8_t> a,
                    std::span<const literal> t) {
  for (const auto &lit : t)
    if ((a[lit.var - 1] != 0) != lit.positive)
      return false;
  return true;
}
} // namespace

bool ce(const truth_table &f, std::span<const literal> c) {
  check_literals(c, f.arity);
  for (std::size_t i = 0; i < f.bits.size(); ++i)
    if (f.bits[i] && !satisfies_clause(assignment_of(f.arity, i), c))
      return false;
  return true;
}

bool im(const truth_table &f, std::span<const literal> t) {
  check_literals(t, f.arity);
  for (std::size_t i = 0; i < f.bits.size(); ++i)
    if (!f.bits[i] && satisfies_term(assignment_of(f.arity, i), t))
      return false;
  return true;
}

truth_table conj(const truth_table &f, const truth_table &g) {
  same_arity(f, g);
  truth_table out = f;
  for (std::size_t i = 0; i < f.bits.size(); ++i)
    out.bits[i] = f.bits[i] & g.bits[i];
  return out;
}

truth_table disj(const truth_table &f, const truth_table &g) {
  same_arity(f, g);
  truth_table out = f;
  for (std::size_t i = 0; i < f.bits.size(); ++i)
    out.bits[i] = f.bits[i] | g.bits[i];
  return out;
}

truth_table negate(const truth_table &f) {
  truth_table out = f;
  for (auto &b : out.bits)
    b ^= 1u;
  return out;
}

truth_table cd(const truth_table &f, std::span<const literal> t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i].var == t[j].var && t[i].positive != t[j].positive)
        throw error(errc::inconsistent_term, "complementary literals");
  check_literals(t, f.arity);
  truth_table out = f;
  for (std::size_t i = 0; i < f.bits.size(); ++i) {
    auto a = assignment_of(f.arity, i);
    for (const auto &lit : t)
      a[lit.var - 1] = lit.positive ? 1 : 0;
    out.bits[i] = f.bits[f.index_of(a)];
  }
  return out;
}

truth_table fo(const truth_table &f, std::span<const var_t> vars) {
  truth_table out = f;
  for (var_t v : vars) {
    if (v < 1 || v > f.arity)
      throw error(errc::unknown_variable, "x" + std::to_string(v));
    const std::size_t mask = std::size_t{1} << bit_of(f.arity, v);
    truth_table next = out;
    for (std::size_t i = 0; i < out.bits.size(); ++i)
      next.bits[i] = out.bits[i] | out.bits[i ^ mask];
    out = std::move(next);
  }
  return out;
}

truth_table sfo(const truth_table &f, var_t v) {
  return fo(f, std::span<const var_t>(&v, 1));
}

std::vector<std::vector<std::uint8_t>> me(const truth_table &f) {
  std::vector<std::vector<std::uint8_t>> out;
  for (std::size_t i = 0; i < f.bits.size(); ++i)
    if (f.bits[i])
      out.push_back(assignment_of(f.arity, i));
  return out;
}

std::size_t matrix_rank(std::vector<big_count> a, std::size_t rows,
                        std::size_t cols) {
  if (a.size() != rows * cols)
    throw error(errc::malformed_tt, "matrix entry count mismatch");
  big_count prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot * cols + col]) == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const big_count *prow = a.data() + rank * cols;
    const big_count p = prow[col];
#pragma omp parallel for schedule(dynamic) if ((rows - rank) * cols > 4096)
    for (long i = static_cast<long>(rank) + 1; i < static_cast<long>(rows);
         ++i) {
      big_count *row = a.data() + static_cast<std::size_t>(i) * cols;
      const big_count factor = row[col];
      big_count t;
      for (std::size_t j = col + 1; j < cols; ++j) {
        t = p * row[j];
        t -= factor * prow[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t unfolding_rank(const tensor_train &tt, std::size_t split) {
  const std::size_t m = tt.modes();
  if (split > m)
    throw error(errc::position_violates_order,
                "split " + std::to_string(split) + " past " +
                    std::to_string(m) + " modes");
  if (split > 12 || m - split > 12)
    throw error(errc::arity_too_large,
                "unfolding sides must have at most 2^12 indices");
  auto values = contract_all(tt);
  const std::size_t rows = std::size_t{1} << split;
  const std::size_t cols = std::size_t{1} << (m - split);
  return matrix_rank(std::move(values), rows, cols);
}

} // namespace ttkc::oracle
