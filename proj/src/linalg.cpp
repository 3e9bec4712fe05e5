#include "lagrel/linalg.hpp"

#include <algorithm>

#include "lagrel/error.hpp"
#include "lagrel/kernels.hpp"

namespace lagrel {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

}  // namespace

RowEchelon row_echelon(Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, r);
    if (m(r, col) != 1) {
      Rational inv = 1 / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }
    kernels::eliminate_column(m, r, col);
    out.pivots.push_back(col);
    ++r;
  }
  out.reduced = Matrix(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.reduced.append_row(m.row(i));
  return out;
}

Matrix rref(const Matrix& m) { return row_echelon(m).reduced; }

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  auto re = row_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : re.pivots) is_pivot[p] = true;
  Matrix out(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t i = 0; i < re.pivots.size(); ++i) x[re.pivots[i]] = -re.reduced(i, f);
    out.append_row(x);
  }
  return out;
}

std::optional<Vector> solve_left(const Matrix& a, const Vector& b) {
  require_dims(b.size(), a.cols(), "solve_left");
  // a^T s = b as an augmented system.
  Matrix aug(a.cols(), a.rows() + 1);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) aug(i, j) = a(j, i);
    aug(i, a.rows()) = b[i];
  }
  auto re = row_echelon(std::move(aug));
  Vector s(a.rows());
  for (std::size_t i = 0; i < re.pivots.size(); ++i) {
    if (re.pivots[i] == a.rows()) return std::nullopt;
    s[re.pivots[i]] = re.reduced(i, a.rows());
  }
  return s;
}

Rational determinant(Matrix m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(m(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      swap_rows(m, p, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto re = row_echelon(hconcat(m, Matrix::identity(n)));
  if (re.pivots.size() < n || (n > 0 && re.pivots[n - 1] != n - 1))
    throw PreconditionError("matrix is singular");
  return re.reduced.col_block(n, n);
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim, const Matrix& spanning) : ambient_(ambient_dim) {
  require_dims(spanning.cols(), ambient_dim, "Subspace");
  auto re = row_echelon(spanning);
  basis_ = std::move(re.reduced);
  pivots_ = std::move(re.pivots);
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
  return Subspace(n, Matrix::from_rows(n, vectors));
}

bool Subspace::contains(const Vector& v) const {
  require_dims(v.size(), ambient_, "Subspace::contains");
  Vector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) r[j] -= c * basis_(i, j);
  }
  return lagrel::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  require_dims(other.ambient_, ambient_, "Subspace::contains");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw PreconditionError("vector does not lie in the subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  int c = compare(a.basis_, b.basis_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_dims(a.ambient_dim(), b.ambient_dim(), "subspace_sum");
  Matrix m = a.basis();
  m.append_rows(b.basis());
  return Subspace(a.ambient_dim(), m);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_dims(a.ambient_dim(), b.ambient_dim(), "subspace_intersect");
  // A n B is the annihilator of ann(A) + ann(B).
  Matrix ann = nullspace(a.basis());
  ann.append_rows(nullspace(b.basis()));
  return Subspace(a.ambient_dim(), nullspace(ann));
}

Subspace apply(const Matrix& g, const Subspace& u) {
  require_dims(g.cols(), u.ambient_dim(), "apply");
  return Subspace(g.rows(), u.basis() * g.transpose());
}

// ---------------------------------------------------------------------------

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw PreconditionError("Gram matrix is not square");
  if (!gram_.is_symmetric()) throw PreconditionError("Gram matrix is not symmetric");
  if (sgn(determinant(gram_)) == 0) throw PreconditionError("Gram matrix is degenerate");
}

BilinearForm BilinearForm::diagonal(const std::vector<Rational>& entries) {
  Matrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return BilinearForm(std::move(g));
}

Rational BilinearForm::pair(const Vector& u, const Vector& v) const {
  require_dims(u.size(), dim(), "BilinearForm::pair");
  return dot(u, gram_ * v);
}

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b) {
  return BilinearForm(block_diagonal(a.gram(), b.gram()));
}

Matrix restricted_gram(const BilinearForm& form, const Matrix& basis) {
  return basis * form.gram() * basis.transpose();
}

Subspace orth_complement(const BilinearForm& form, const Subspace& u) {
  require_dims(u.ambient_dim(), form.dim(), "orth_complement");
  return Subspace(form.dim(), nullspace(u.basis() * form.gram()));
}

bool is_coisotropic(const BilinearForm& form, const Subspace& u) {
  return u.contains(orth_complement(form, u));
}

bool is_nondegenerate_on(const BilinearForm& form, const Subspace& u) {
  return sgn(determinant(restricted_gram(form, u.basis()))) != 0;
}

QuotientSpace quotient(const BilinearForm& form, const Subspace& v0) {
  require_dims(v0.ambient_dim(), form.dim(), "quotient");
  Subspace v1 = orth_complement(form, v0);
  if (!v0.contains(v1)) throw NotCoisotropic("subspace is not coisotropic");

  const std::size_t n = form.dim();
  const std::size_t d0 = v0.dim();
  Matrix c1(0, d0);
  for (std::size_t r = 0; r < v1.dim(); ++r) c1.append_row(v0.coordinates(v1.basis_vector(r)));
  auto re1 = row_echelon(c1);

  std::vector<bool> is_pivot(d0, false);
  for (auto p : re1.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t i = 0; i < d0; ++i)
    if (!is_pivot[i]) free_cols.push_back(i);

  const std::size_t k = free_cols.size();
  Matrix projection(k, n);
  Matrix lifts(0, n);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t q = free_cols[j];
    projection(j, v0.pivots()[q]) = 1;
    for (std::size_t r = 0; r < re1.pivots.size(); ++r)
      projection(j, v0.pivots()[re1.pivots[r]]) -= re1.reduced(r, q);
    lifts.append_row(v0.basis().row(q));
  }
  BilinearForm induced(restricted_gram(form, lifts));
  return QuotientSpace{v0, std::move(v1), std::move(projection), std::move(lifts),
                       std::move(induced)};
}

}  // namespace lagrel
