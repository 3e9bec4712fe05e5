#include "lagrel/invariants.hpp"

#include <algorithm>

#include "lagrel/error.hpp"
#include "lagrel/kernels.hpp"

namespace lagrel {

namespace {

constexpr std::size_t kChunk = 32;

// Refines the full coefficient space by the constraints of each relation,
// one chunk at a time, so the stacked system never materializes.
GradedPiece solve(std::size_t n, std::span<const LinearRelation> relations, std::uint32_t degree,
                  bool parallel) {
  const std::size_t count = monomial_count(n, degree);
  Matrix k = Matrix::identity(count);
  for (std::size_t start = 0; start < relations.size() && k.rows() > 0; start += kChunk) {
    auto chunk = relations.subspan(start, std::min(kChunk, relations.size() - start));
    auto blocks = parallel ? kernels::constraint_blocks(chunk, degree)
                           : kernels::constraint_blocks_ref(chunk, degree);
    for (const auto& c : blocks) {
      if (k.rows() == 0) break;
      Matrix m = c * k.transpose();
      if (m.is_zero()) continue;
      k = nullspace(m) * k;
    }
  }
  return GradedPiece{n, degree, Subspace(count, k)};
}

std::vector<LinearRelation> isometry_graphs(const std::vector<Isometry>& group) {
  if (group.empty()) throw PreconditionError("empty group");
  std::vector<LinearRelation> out;
  out.reserve(group.size());
  for (const auto& s : group) out.push_back(LinearRelation::graph(s.form_ptr(), s.matrix()));
  return out;
}

}  // namespace

std::vector<Polynomial> GradedPiece::basis() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < space.dim(); ++i)
    out.push_back(Polynomial::from_coefficients(num_vars, degree, space.basis_vector(i)));
  return out;
}

bool GradedPiece::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  if (p.num_vars() != num_vars || !p.is_homogeneous() || p.degree() != static_cast<int>(degree))
    return false;
  return space.contains(p.coefficients(degree));
}

GradedPiece invariant_space(const LagrangianEquivalenceRelation& r, std::uint32_t degree) {
  return solve(r.n(), r.components(), degree, true);
}

GradedPiece invariant_space_ref(const LagrangianEquivalenceRelation& r, std::uint32_t degree) {
  return solve(r.n(), r.components(), degree, false);
}

GradedPiece invariant_space(std::size_t n, const std::vector<LinearRelation>& relations,
                            std::uint32_t degree) {
  for (const auto& l : relations) require_dims(l.n(), n, "invariant_space");
  return solve(n, relations, degree, true);
}

GradedPiece weyl_invariant_space(const std::vector<Isometry>& group, std::uint32_t degree) {
  // Graph of s gives f(x) = f(s x), exactly the constraint f o s = f.
  auto graphs = isometry_graphs(group);
  return solve(group.front().matrix().rows(), graphs, degree, true);
}

GradedPiece reynolds_invariant_space(const std::vector<Isometry>& group, std::uint32_t degree) {
  if (group.empty()) throw PreconditionError("empty group");
  const std::size_t n = group.front().matrix().rows();
  const std::size_t count = monomial_count(n, degree);
  Matrix sum(count, count);
  for (const auto& s : group) sum = sum + substitution_matrix(s.matrix().transpose(), degree);
  // Column m is |W| times the average of monomial m.
  return GradedPiece{n, degree, Subspace(count, sum.transpose())};
}

DiscriminantPolynomial discriminant_polynomial(const LagrangianEquivalenceRelation& r) {
  auto reg = is_one_regular(r);
  if (!reg.holds || !reg.witness)
    throw PreconditionError("discriminant_polynomial: R is not 1-regular with a hyperplane witness");
  DiscriminantPolynomial out;
  out.hyperplanes = maximal_discriminant(r);
  const std::size_t n = r.n();
  Polynomial t = Polynomial::constant(n, 1);
  for (const auto& h : out.hyperplanes) {
    Matrix ann = nullspace(h.basis());
    t = t * Polynomial::linear(ann.row_vector(0));
  }
  t *= 1 / t.leading_term().second;
  out.degree = static_cast<std::uint32_t>(out.hyperplanes.size());
  if (!invariant_space(r, out.degree).contains(t)) {
    t = t * t;
    out.degree *= 2;
    out.squared = true;
    if (!invariant_space(r, out.degree).contains(t))
      throw InvariantViolation("discriminant_polynomial: T is not R-invariant");
  }
  out.t = std::move(t);
  return out;
}

RestrictionMap restriction_map(const LagrangianEquivalenceRelation& r, const Subspace& v0,
                               std::uint32_t degree) {
  auto reduced = reduce(r, v0);
  const QuotientSpace q = quotient(r.form(), v0);
  RestrictionMap out;
  out.source = invariant_space(r, degree);
  out.target = invariant_space(reduced, degree);
  // f o lift, with u in V0/V1 mapped to sum_j u_j lift_j.
  const Matrix s = substitution_matrix(q.lifts, degree);
  out.matrix = Matrix(out.target.dim(), out.source.dim());
  for (std::size_t j = 0; j < out.source.dim(); ++j) {
    Vector image = s * out.source.space.basis_vector(j);
    if (!out.target.space.contains(image))
      throw InvariantViolation("restriction_map: image is not an invariant of the reduction");
    Vector c = out.target.space.coordinates(image);
    for (std::size_t i = 0; i < c.size(); ++i) out.matrix(i, j) = c[i];
  }
  out.rank = rank(out.matrix);
  return out;
}

std::vector<GradedPiece> invariant_pieces(const LagrangianEquivalenceRelation& r, std::uint32_t dmax) {
  std::vector<GradedPiece> out;
  for (std::uint32_t d = 1; d <= dmax; ++d) out.push_back(invariant_space(r, d));
  return out;
}

SeparationResult separate(const LagrangianEquivalenceRelation& r,
                          const std::vector<GradedPiece>& pieces, const Vector& x, const Vector& y) {
  SeparationResult out;
  out.equivalent = membership(r, x, y);
  for (const auto& piece : pieces) {
    for (const auto& f : piece.basis()) {
      Rational fx = f.evaluate(x), fy = f.evaluate(y);
      if (fx == fy) continue;
      if (out.equivalent)
        throw InvariantViolation("separate: an invariant differs on an equivalent pair");
      out.certificate = SeparationCertificate{f, piece.degree, fx, fy};
      return out;
    }
  }
  out.exhausted = !out.equivalent;
  return out;
}

SeparationResult separate(const LagrangianEquivalenceRelation& r, const Vector& x, const Vector& y,
                          std::uint32_t dmax) {
  require_dims(x.size(), r.n(), "separate");
  require_dims(y.size(), r.n(), "separate");
  if (!membership(r, x, y)) {
    // Stop at the first separating degree instead of computing all pieces.
    for (std::uint32_t d = 1; d <= dmax; ++d) {
      auto res = separate(r, std::vector<GradedPiece>{invariant_space(r, d)}, x, y);
      if (res.certificate) return res;
    }
    SeparationResult out;
    out.exhausted = true;
    return out;
  }
  return separate(r, invariant_pieces(r, dmax), x, y);
}

ProductCheck product_invariant_check(const LagrangianEquivalenceRelation& r,
                                     const LagrangianEquivalenceRelation& r_prime,
                                     std::uint32_t degree) {
  ProductCheck out;
  out.direct = invariant_space(product(r, r_prime), degree).dim();
  for (std::uint32_t a = 0; a <= degree; ++a)
    out.convolution += invariant_space(r, a).dim() * invariant_space(r_prime, degree - a).dim();
  return out;
}

std::optional<std::vector<Vector>> independent_points(const std::vector<Polynomial>& family,
                                                      std::mt19937_64& rng,
                                                      std::size_t attempts_per_point) {
  const std::size_t k = family.size();
  if (k == 0) return std::vector<Vector>{};
  const std::size_t n = family.front().num_vars();
  std::uniform_int_distribution<int> coord(-9, 9);
  std::uniform_int_distribution<int> denom(1, 4);
  std::vector<Vector> points;
  Matrix values(0, k);
  while (points.size() < k) {
    bool found = false;
    for (std::size_t attempt = 0; attempt < attempts_per_point && !found; ++attempt) {
      Vector p(n);
      for (auto& c : p) {
        c = Rational(coord(rng), denom(rng));
        c.canonicalize();
      }
      Vector row(k);
      for (std::size_t i = 0; i < k; ++i) row[i] = family[i].evaluate(p);
      Matrix trial = values;
      trial.append_row(row);
      if (rank(trial) == trial.rows()) {
        values = std::move(trial);
        points.push_back(std::move(p));
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return points;
}

}  // namespace lagrel
