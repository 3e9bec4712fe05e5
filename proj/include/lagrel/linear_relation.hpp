#pragma once

#include <memory>
#include <optional>

#include "lagrel/linalg.hpp"

namespace lagrel {

using FormPtr = std::shared_ptr<const BilinearForm>;

inline FormPtr make_form(BilinearForm f) { return std::make_shared<const BilinearForm>(std::move(f)); }

/// Same form by identity or by value.
bool same_form(const FormPtr& a, const FormPtr& b);

/// Pairing on V x V used for isotropy: B((v,w),(v',w')) = <v|v'> - <w|w'>.
Rational relation_b(const BilinearForm& form, const Vector& vw, const Vector& vw_prime);

/// A subspace L of V x V. Vectors of V x V are stored as (v, w) concatenated,
/// so `space()` has ambient dimension 2n.
class LinearRelation {
 public:
  LinearRelation() = default;
  LinearRelation(FormPtr form, Subspace space);

  static LinearRelation diagonal(FormPtr form);
  /// Graph {(v, g v)}.
  static LinearRelation graph(FormPtr form, const Matrix& g);

  const FormPtr& form_ptr() const { return form_; }
  const BilinearForm& form() const { return *form_; }
  const Subspace& space() const { return space_; }
  std::size_t n() const { return form_->dim(); }
  std::size_t dim() const { return space_.dim(); }

  bool is_isotropic() const { return isotropic_; }
  bool is_lagrangian() const { return isotropic_ && dim() == n(); }

  /// p1(L), p2(L) as subspaces of V.
  Subspace p1() const;
  Subspace p2() const;
  /// K1 = Ker p1 = {(0, w) in L}, K2 = Ker p2 = {(v, 0) in L}, inside V x V.
  Subspace k1() const;
  Subspace k2() const;

  bool contains(const Vector& x, const Vector& y) const;

  friend bool operator==(const LinearRelation& a, const LinearRelation& b) {
    return a.space_ == b.space_ && same_form(a.form_, b.form_);
  }

 private:
  FormPtr form_;
  Subspace space_;
  bool isotropic_ = false;
};

bool is_isotropic(const LinearRelation& l);
bool is_lagrangian(const LinearRelation& l);

/// L' o L = {(x, z) : exists y, (x, y) in L, (y, z) in L'}.
LinearRelation compose(const LinearRelation& l, const LinearRelation& l_prime);
LinearRelation inverse(const LinearRelation& l);

/// dim K1 (= dim K2, asserted). Throws NotLagrangian.
std::size_t atypicality(const LinearRelation& l);

/// E_{V0} = {(v, v + w) : v in V0, w in V0^perp}. Throws NotCoisotropic.
LinearRelation idempotent_for(const FormPtr& form, const Subspace& v0);

/// V0 = p1(E) for an idempotent lagrangian E; asserts E == E_{V0}.
Subspace classify_idempotent(const LinearRelation& e);

/// Components of the first or second factor of a subspace of V x V.
Subspace first_factor(const Subspace& s);
Subspace second_factor(const Subspace& s);

/// Exact isometry of a form: g^T G g = G.
class Isometry {
 public:
  /// Throws PreconditionError if g is not an isometry of `form`.
  Isometry(Matrix g, FormPtr form);

  const Matrix& matrix() const { return g_; }
  const BilinearForm& form() const { return *form_; }
  const FormPtr& form_ptr() const { return form_; }
  Vector operator()(const Vector& v) const { return g_ * v; }
  Isometry inverse() const;

  friend Isometry operator*(const Isometry& a, const Isometry& b);
  friend bool operator==(const Isometry& a, const Isometry& b) { return a.g_ == b.g_; }

 private:
  Matrix g_;
  FormPtr form_;
};

bool is_isometry(const BilinearForm& form, const Matrix& g);

/// Reflection s_a(v) = v - 2<v|a>/<a|a> a for anisotropic a.
Matrix reflection(const BilinearForm& form, const Vector& a);

/// Complete invariant of a lagrangian relation: its projections and the
/// induced isometry between the quotients p1/p1^perp -> p2/p2^perp.
struct CanonicalData {
  Subspace v0;
  Subspace v0_prime;
  Matrix alpha;  // columns: images of the quotient basis of V0/V1
};

CanonicalData canonical_data(const LinearRelation& l);
/// Inverse of canonical_data. Throws PreconditionError if alpha is not an
/// isometry of the induced forms.
LinearRelation reconstruct(const FormPtr& form, const CanonicalData& data);

}  // namespace lagrel
