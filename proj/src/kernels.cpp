#include "ttkc/kernels.hpp"

#include "ttkc/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace ttkc {
namespace {

template <class T> struct acc;

template <> struct acc<std::int64_t> {
  static bool add(std::int64_t &a, std::int64_t v) noexcept {
    return detail::add_checked(a, v);
  }
  static bool sub(std::int64_t &a, std::int64_t v) noexcept {
    return !__builtin_sub_overflow(a, v, &a);
  }
  static bool zero(std::int64_t v) noexcept { return v == 0; }
};

template <> struct acc<big_count> {
  static bool add(big_count &a, const big_count &v) {
    a += v;
    return true;
  }
  static bool sub(big_count &a, const big_count &v) {
    a -= v;
    return true;
  }
  static bool zero(const big_count &v) { return sgn(v) == 0; }
};

// out = v * A(., b, .); false on int64 overflow
template <class T>
bool step(const std::vector<T> &v, const ternary_core &core, unsigned b,
          std::vector<T> &out) {
  const auto q = core.right_rank();
  out.assign(q, T(0));
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (acc<T>::zero(v[l]))
      continue;
    auto row = core.row(l, b);
    for (std::size_t c = 0; c < q; ++c) {
      if (row[c] == 1) {
        if (!acc<T>::add(out[c], v[l]))
          return false;
      } else if (row[c] == -1) {
        if (!acc<T>::sub(out[c], v[l]))
          return false;
      }
    }
  }
  return true;
}

template <class T>
bool sweep(const tensor_train &tt, std::span<const std::uint8_t> assignment,
           T &result) {
  std::vector<T> v{T(1)}, next;
  for (std::size_t i = 0; i < tt.modes(); ++i) {
    unsigned b = assignment[tt.map()[i] - 1] ? 1u : 0u;
    if (!step(v, tt.core(i), b, next))
      return false;
    std::swap(v, next);
  }
  result = v[0];
  return true;
}

// Depth-first contraction below a fixed prefix; buffers are per thread.
template <class T> struct contractor {
  const tensor_train &tt;
  std::vector<T> &out;
  std::vector<std::vector<T>> buf;

  bool run(std::size_t depth, std::size_t index) {
    if (depth == tt.modes()) {
      out[index] = buf[depth][0];
      return true;
    }
    for (unsigned b = 0; b < 2; ++b) {
      if (!step(buf[depth], tt.core(depth), b, buf[depth + 1]))
        return false;
      if (!run(depth + 1, index * 2 + b))
        return false;
    }
    return true;
  }
};

constexpr std::size_t max_contract_modes = 30;

template <class T>
bool contract_all_impl(const tensor_train &tt, std::vector<T> &out) {
  const std::size_t m = tt.modes();
  if (m > max_contract_modes)
    throw error(errc::arity_too_large,
                std::to_string(m) + " modes exceed the contraction limit");
  out.assign(std::size_t{1} << m, T(0));
  const std::size_t split = std::min<std::size_t>(m, 8);
  const long prefixes = 1L << split;
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (long p = 0; p < prefixes; ++p) {
    contractor<T> c{tt, out, std::vector<std::vector<T>>(m + 1)};
    c.buf[0] = {T(1)};
    bool good = true;
    for (std::size_t i = 0; i < split && good; ++i) {
      unsigned b = (static_cast<unsigned long>(p) >> (split - 1 - i)) & 1u;
      good = step(c.buf[i], tt.core(i), b, c.buf[i + 1]);
    }
    if (good)
      good = c.run(split, static_cast<std::size_t>(p));
    ok = ok && good;
  }
  return ok;
}

void require_aligned(const tensor_train &a, const tensor_train &b) {
  if (!is_aligned(a, b))
    throw error(errc::not_aligned,
                "operands must share arity and variable map");
}

} // namespace

big_count evaluate_value(const tensor_train &tt,
                         std::span<const std::uint8_t> assignment) {
  if (assignment.size() != tt.arity())
    throw error(errc::arity_mismatch,
                "assignment has " + std::to_string(assignment.size()) +
                    " bits, function has arity " +
                    std::to_string(tt.arity()));
  std::int64_t fast = 0;
  if (sweep(tt, assignment, fast))
    return big_count(static_cast<long>(fast));
  big_count slow;
  sweep(tt, assignment, slow);
  return slow;
}

bool evaluate(const tensor_train &tt, std::span<const std::uint8_t> assignment) {
  auto v = evaluate_value(tt, assignment);
  if (v == 0)
    return false;
  if (v == 1)
    return true;
  throw error(errc::non_binary_value,
              "tensor train evaluates to " + v.get_str());
}

tensor_train embed(const tensor_train &tt, std::span<const var_t> vars) {
  std::vector<ternary_core> cores;
  cores.reserve(vars.size());
  std::size_t next = 0;
  std::size_t bond = 1;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k > 0 && vars[k - 1] >= vars[k])
      throw error(errc::position_violates_order,
                  "target variable list is not strictly increasing");
    if (next < tt.modes() && tt.map()[next] == vars[k]) {
      cores.push_back(tt.core(next));
      bond = tt.core(next).right_rank();
      ++next;
    } else {
      if (next < tt.modes() && tt.map()[next] < vars[k])
        throw error(errc::position_violates_order,
                    "variable " + std::to_string(tt.map()[next]) +
                        " missing from target list");
      cores.push_back(ternary_core::identity(bond));
    }
  }
  if (next != tt.modes())
    throw error(errc::position_violates_order,
                "target list does not contain every mapped variable");
  return {tt.arity(), std::move(cores),
          std::vector<var_t>(vars.begin(), vars.end())};
}

tensor_train insert_identity(const tensor_train &tt, std::size_t position,
                             var_t v) {
  const auto &map = tt.map();
  if (v < 1 || v > tt.arity())
    throw error(errc::unknown_variable,
                "variable " + std::to_string(v) + " outside arity " +
                    std::to_string(tt.arity()));
  if (position > tt.modes())
    throw error(errc::position_violates_order,
                "position " + std::to_string(position) + " past last core");
  bool after_prev = position == 0 || map[position - 1] < v;
  bool before_next = position == tt.modes() || v < map[position];
  if (!after_prev || !before_next)
    throw error(errc::position_violates_order,
                "inserting variable " + std::to_string(v) + " at position " +
                    std::to_string(position) + " breaks the variable order");
  std::vector<var_t> vars(map.begin(), map.end());
  vars.insert(vars.begin() + static_cast<long>(position), v);
  return embed(tt, vars);
}

bool is_aligned(const tensor_train &a, const tensor_train &b) noexcept {
  return a.arity() == b.arity() && a.map() == b.map();
}

std::pair<tensor_train, tensor_train> align(const tensor_train &a,
                                            const tensor_train &b) {
  if (a.arity() != b.arity())
    throw error(errc::arity_mismatch,
                "arities " + std::to_string(a.arity()) + " and " +
                    std::to_string(b.arity()));
  if (a.map() == b.map())
    return {a, b};
  std::vector<var_t> vars;
  vars.reserve(a.modes() + b.modes());
  std::set_union(a.map().begin(), a.map().end(), b.map().begin(),
                 b.map().end(), std::back_inserter(vars));
  return {embed(a, vars), embed(b, vars)};
}

tensor_train tt_sum(const tensor_train &a, const tensor_train &b) {
  require_aligned(a, b);
  const std::size_t m = a.modes();
  std::vector<ternary_core> cores;
  cores.reserve(m);
  if (m == 1) {
    std::vector<std::int8_t> e(2);
    for (unsigned x = 0; x < 2; ++x) {
      int s = a.core(0)(0, x, 0) + b.core(0)(0, x, 0);
      if (s < -1 || s > 1)
        throw error(errc::non_ternary,
                    "single-mode sum produces entry " + std::to_string(s));
      e[x] = static_cast<std::int8_t>(s);
    }
    cores.emplace_back(1, 1, std::move(e));
    return {a.arity(), std::move(cores), a.map()};
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto &ca = a.core(i);
    const auto &cb = b.core(i);
    const bool first = i == 0;
    const bool last = i + 1 == m;
    const std::size_t rows = first ? 1 : ca.left_rank() + cb.left_rank();
    const std::size_t cols = last ? 1 : ca.right_rank() + cb.right_rank();
    std::vector<std::int8_t> e(2 * rows * cols, 0);
    auto put = [&](std::size_t r, unsigned x, std::size_t c, std::int8_t v) {
      e[(r * 2 + x) * cols + c] = v;
    };
    const std::size_t row_off = first ? 0 : ca.left_rank();
    const std::size_t col_off = last ? 0 : ca.right_rank();
    for (unsigned x = 0; x < 2; ++x) {
      for (std::size_t r = 0; r < ca.left_rank(); ++r)
        for (std::size_t c = 0; c < ca.right_rank(); ++c)
          put(r, x, c, ca(r, x, c));
      for (std::size_t r = 0; r < cb.left_rank(); ++r)
        for (std::size_t c = 0; c < cb.right_rank(); ++c)
          put(row_off + r, x, col_off + c, cb(r, x, c));
    }
    cores.emplace_back(rows, cols, std::move(e));
  }
  return {a.arity(), std::move(cores), a.map()};
}

tensor_train tt_hadamard(const tensor_train &a, const tensor_train &b) {
  require_aligned(a, b);
  std::vector<ternary_core> cores;
  cores.reserve(a.modes());
  for (std::size_t i = 0; i < a.modes(); ++i) {
    const auto &ca = a.core(i);
    const auto &cb = b.core(i);
    const std::size_t q = cb.left_rank();
    const std::size_t qr = cb.right_rank();
    const std::size_t rows = ca.left_rank() * q;
    const std::size_t cols = ca.right_rank() * qr;
    std::vector<std::int8_t> e(2 * rows * cols, 0);
#pragma omp parallel for schedule(static) if (rows * cols > 4096)
    for (long row = 0; row < static_cast<long>(rows); ++row) {
      const std::size_t l = static_cast<std::size_t>(row) / q;
      const std::size_t k = static_cast<std::size_t>(row) % q;
      for (unsigned x = 0; x < 2; ++x) {
        auto arow = ca.row(l, x);
        auto brow = cb.row(k, x);
        std::int8_t *dst = e.data() + (static_cast<std::size_t>(row) * 2 + x) * cols;
        for (std::size_t lc = 0; lc < arow.size(); ++lc) {
          if (arow[lc] == 0)
            continue;
          for (std::size_t kc = 0; kc < qr; ++kc)
            dst[lc * qr + kc] = static_cast<std::int8_t>(arow[lc] * brow[kc]);
        }
      }
    }
    cores.emplace_back(rows, cols, std::move(e));
  }
  return {a.arity(), std::move(cores), a.map()};
}

big_count tt_inner(const tensor_train &a, const tensor_train &b) {
  require_aligned(a, b);
  // x holds sum over prefixes of A-prefix^T * B-prefix, shape r x q.
  std::vector<big_count> x{big_count(1)};
  std::size_t r = 1, q = 1;
  std::vector<big_count> y, next;
  for (std::size_t i = 0; i < a.modes(); ++i) {
    const auto &ca = a.core(i);
    const auto &cb = b.core(i);
    const std::size_t r2 = ca.right_rank();
    const std::size_t q2 = cb.right_rank();
    next.assign(r2 * q2, big_count(0));
    for (unsigned s = 0; s < 2; ++s) {
      // y = x * B(., s, .), shape r x q2
      y.assign(r * q2, big_count(0));
#pragma omp parallel for schedule(dynamic) if (r * q2 > 64)
      for (long l = 0; l < static_cast<long>(r); ++l) {
        big_count *yrow = y.data() + static_cast<std::size_t>(l) * q2;
        const big_count *xrow = x.data() + static_cast<std::size_t>(l) * q;
        for (std::size_t k = 0; k < q; ++k) {
          if (sgn(xrow[k]) == 0)
            continue;
          auto brow = cb.row(k, s);
          for (std::size_t c = 0; c < q2; ++c) {
            if (brow[c] == 1)
              yrow[c] += xrow[k];
            else if (brow[c] == -1)
              yrow[c] -= xrow[k];
          }
        }
      }
      // next += A(., s, .)^T * y, one output row per column of A
      std::vector<std::vector<std::pair<std::size_t, std::int8_t>>> cols(r2);
      for (std::size_t l = 0; l < r; ++l) {
        auto arow = ca.row(l, s);
        for (std::size_t c = 0; c < r2; ++c)
          if (arow[c] != 0)
            cols[c].emplace_back(l, arow[c]);
      }
#pragma omp parallel for schedule(dynamic) if (r2 * q2 > 64)
      for (long c = 0; c < static_cast<long>(r2); ++c) {
        big_count *nrow = next.data() + static_cast<std::size_t>(c) * q2;
        for (auto [l, sign] : cols[static_cast<std::size_t>(c)]) {
          const big_count *yrow = y.data() + l * q2;
          for (std::size_t k = 0; k < q2; ++k) {
            if (sign == 1)
              nrow[k] += yrow[k];
            else
              nrow[k] -= yrow[k];
          }
        }
      }
    }
    std::swap(x, next);
    r = r2;
    q = q2;
  }
  return x[0];
}

tensor_train negate_scalar(const tensor_train &tt) {
  std::vector<ternary_core> cores = tt.cores();
  const auto &first = cores.front();
  std::vector<std::int8_t> e(first.entries().begin(), first.entries().end());
  for (auto &v : e)
    v = static_cast<std::int8_t>(-v);
  cores.front() = ternary_core(first.left_rank(), first.right_rank(),
                               std::move(e));
  return {tt.arity(), std::move(cores), tt.map()};
}

tensor_train ones_tt(std::size_t arity, std::vector<var_t> map) {
  std::vector<ternary_core> cores(map.size(), ternary_core::vector(1, 1));
  return {arity, std::move(cores), std::move(map)};
}

tensor_train constant_tt(std::size_t arity, bool value) {
  std::int8_t v = value ? 1 : 0;
  return {arity, {ternary_core::vector(v, v)}, {1}};
}

rational
contract_weights(const tensor_train &tt,
                 std::span<const std::pair<rational, rational>> weights) {
  if (weights.size() != tt.modes())
    throw error(errc::weight_arity_mismatch,
                "need one weight pair per mode");
  std::vector<rational> v{rational(1)}, next;
  for (std::size_t i = 0; i < tt.modes(); ++i) {
    const auto &core = tt.core(i);
    next.assign(core.right_rank(), rational(0));
    for (unsigned s = 0; s < 2; ++s) {
      const rational &w = s == 0 ? weights[i].first : weights[i].second;
      if (sgn(w) == 0)
        continue;
      for (std::size_t l = 0; l < v.size(); ++l) {
        if (sgn(v[l]) == 0)
          continue;
        rational term = v[l] * w;
        auto row = core.row(l, s);
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (row[c] == 1)
            next[c] += term;
          else if (row[c] == -1)
            next[c] -= term;
        }
      }
    }
    std::swap(v, next);
  }
  return v[0];
}

std::optional<std::vector<std::int64_t>>
contract_all_i64(const tensor_train &tt) {
  std::vector<std::int64_t> out;
  if (!contract_all_impl(tt, out))
    return std::nullopt;
  return out;
}

std::vector<big_count> contract_all(const tensor_train &tt) {
  if (auto fast = contract_all_i64(tt)) {
    std::vector<big_count> out;
    out.reserve(fast->size());
    for (auto v : *fast)
      out.emplace_back(static_cast<long>(v));
    return out;
  }
  std::vector<big_count> out;
  contract_all_impl(tt, out);
  return out;
}

} // namespace ttkc
