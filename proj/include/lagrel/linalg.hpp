#pragma once

// Exact linear algebra over Q: row reduction, canonical subspaces, symmetric
// bilinear forms, orthogonal complements and quotients V0 / V0^perp.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "lagrel/matrix.hpp"

namespace lagrel {

struct RowEchelon {
  Matrix reduced;                    // rank rows, reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Gauss-Jordan elimination; zero rows are dropped.
RowEchelon row_echelon(Matrix m);

/// Unique reduced row echelon form with zero rows removed.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis (as rows) of {x : m x = 0}; one row per free column, with a 1 in that
/// free column.
Matrix nullspace(const Matrix& m);

/// Some s with s * a = b, if one exists.
std::optional<Vector> solve_left(const Matrix& a, const Vector& b);

Rational determinant(Matrix m);

/// Throws PreconditionError if singular.
Matrix inverse(const Matrix& m);

/// A subspace of Q^n held by its reduced row echelon basis. Equal subspaces
/// have identical bases, so equality and ordering are structural.
class Subspace {
 public:
  Subspace() = default;
  /// Row space of `spanning` (which may contain dependent or zero rows).
  Subspace(std::size_t ambient_dim, const Matrix& spanning);

  static Subspace zero(std::size_t n) { return Subspace(n, Matrix(0, n)); }
  static Subspace full(std::size_t n) { return Subspace(n, Matrix::identity(n)); }
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_ - dim(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates c with v = c * basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
inline bool contains(const Subspace& a, const Subspace& b) { return a.contains(b); }
inline bool equals(const Subspace& a, const Subspace& b) { return a == b; }

/// Image g(U) of U under the linear map v -> g v.
Subspace apply(const Matrix& g, const Subspace& u);

/// Nondegenerate symmetric bilinear form <u|v> = u^T G v.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws PreconditionError unless gram is square, symmetric and invertible.
  explicit BilinearForm(Matrix gram);

  static BilinearForm diagonal(const std::vector<Rational>& entries);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational pair(const Vector& u, const Vector& v) const;
  Rational norm(const Vector& v) const { return pair(v, v); }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

/// Orthogonal direct sum.
BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b);

/// Gram matrix of the form restricted to the row space of `basis`
/// (basis * G * basis^T). May be degenerate.
Matrix restricted_gram(const BilinearForm& form, const Matrix& basis);

Subspace orth_complement(const BilinearForm& form, const Subspace& u);
bool is_coisotropic(const BilinearForm& form, const Subspace& u);
bool is_nondegenerate_on(const BilinearForm& form, const Subspace& u);

/// Quotient V0 / V1 for coisotropic V0 and V1 = V0^perp, in deterministic
/// coordinates: the complement of V1 inside V0 is spanned by the V0 basis
/// rows at the non-pivot columns of V1 expressed in V0 coordinates.
struct QuotientSpace {
  Subspace v0;
  Subspace v1;
  Matrix projection;  // k x n; on V0 its kernel is exactly V1
  Matrix lifts;       // k x n; row j is a vector of V0 projecting to e_j
  BilinearForm induced_form;

  std::size_t dim() const { return projection.rows(); }
  Vector project(const Vector& v) const { return projection * v; }
  /// Vector of V0 whose class has quotient coordinates u.
  Vector lift(const Vector& u) const { return row_times(u, lifts); }
};

/// Throws NotCoisotropic unless V0 contains V0^perp.
QuotientSpace quotient(const BilinearForm& form, const Subspace& v0);

}  // namespace lagrel
