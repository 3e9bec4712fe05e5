#pragma once

#include "lagrel/invariants.hpp"
#include "lagrel/wgrs.hpp"
#include "oracle.hpp"

namespace testing {

using namespace lagrel;

inline Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

inline Vector vec(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.push_back(q(x));
  return out;
}

inline oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
  return out;
}

inline oracle::Rows rows_of(const Subspace& s) { return rows_of(s.basis()); }

inline RootSystem gl(int m, int n) { return catalog("gl", {m, n}); }
inline RootSystem osp(int m, int n) { return catalog("osp", {m, n}); }

inline FormPtr hyperbolic_plane() { return make_form(BilinearForm(Matrix{{0, 1}, {1, 0}})); }

inline std::vector<oracle::PairRows> pair_rows(const LagrangianEquivalenceRelation& r) {
  std::vector<oracle::PairRows> out;
  for (const auto& l : r.components()) out.push_back({r.n(), rows_of(l.space())});
  return out;
}

/// (x, y) concatenated, for membership in a relation's space.
inline Vector join(const Vector& x, const Vector& y) {
  Vector out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace testing
