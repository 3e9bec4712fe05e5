#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's elimination, composition or invariant code.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Rows = std::vector<Vec>;

/// Rank by plain Gaussian elimination with partial search for nonzero pivots.
inline std::size_t rank(Rows rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline Rows concat(Rows a, const Rows& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// dim(A cap B) = dim A + dim B - dim(A + B).
inline std::size_t intersection_dim(const Rows& a, const Rows& b) {
  return rank(a) + rank(b) - rank(concat(a, b));
}

inline bool in_span(const Rows& a, const Vec& v) {
  return rank(a) == rank(concat(a, Rows{v}));
}

inline Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Exponent vectors of total degree d in n variables, any order.
inline std::vector<std::vector<std::uint32_t>> monomials(std::size_t n, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline Q monomial_value(const std::vector<std::uint32_t>& e, const Vec& x) {
  Q v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::uint32_t k = 0; k < e[i]; ++k) v *= x[i];
  return v;
}

/// Random small rational.
inline Q random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// A relation given by rows (x | y) of length 2n, sampled at points t.
struct PairRows {
  std::size_t n = 0;
  Rows rows;
};

/// dim of degree-d polynomials f with f(x) = f(y) for every (x, y) in every
/// relation, by evaluating monomials at random points of each relation and
/// taking the rank of the difference rows. `samples` per relation must
/// exceed the number of monomials for the generic-rank argument to hold.
inline std::size_t invariant_dim(const std::vector<PairRows>& relations, std::size_t n,
                                 std::uint32_t d, std::mt19937_64& rng) {
  const auto mons = monomials(n, d);
  Rows constraints;
  const std::size_t samples = mons.size() + 8;
  for (const auto& rel : relations) {
    for (std::size_t s = 0; s < samples; ++s) {
      Vec xy(2 * n, 0);
      for (const auto& row : rel.rows) {
        Q c = random_q(rng);
        for (std::size_t j = 0; j < 2 * n; ++j) xy[j] += c * row[j];
      }
      Vec x(xy.begin(), xy.begin() + n), y(xy.begin() + n, xy.end());
      Vec row(mons.size());
      for (std::size_t m = 0; m < mons.size(); ++m)
        row[m] = monomial_value(mons[m], x) - monomial_value(mons[m], y);
      constraints.push_back(std::move(row));
    }
  }
  return mons.size() - rank(constraints);
}

}  // namespace oracle
