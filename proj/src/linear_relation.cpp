#include "lagrel/linear_relation.hpp"

#include "lagrel/error.hpp"

namespace lagrel {

namespace {

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Matrix first_block(const Subspace& s) { return s.basis().col_block(0, s.ambient_dim() / 2); }
Matrix second_block(const Subspace& s) {
  const std::size_t n = s.ambient_dim() / 2;
  return s.basis().col_block(n, n);
}

void require_lagrangian(const LinearRelation& l, const char* what) {
  if (!l.is_lagrangian()) throw NotLagrangian(std::string(what) + ": relation is not Lagrangian");
}

}  // namespace

bool same_form(const FormPtr& a, const FormPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Rational relation_b(const BilinearForm& form, const Vector& vw, const Vector& vw_prime) {
  const std::size_t n = form.dim();
  require_dims(vw.size(), 2 * n, "relation_b");
  require_dims(vw_prime.size(), 2 * n, "relation_b");
  Vector v(vw.begin(), vw.begin() + n), w(vw.begin() + n, vw.end());
  Vector vp(vw_prime.begin(), vw_prime.begin() + n), wp(vw_prime.begin() + n, vw_prime.end());
  return form.pair(v, vp) - form.pair(w, wp);
}

LinearRelation::LinearRelation(FormPtr form, Subspace space)
    : form_(std::move(form)), space_(std::move(space)) {
  if (!form_) throw PreconditionError("LinearRelation without a form");
  require_dims(space_.ambient_dim(), 2 * form_->dim(), "LinearRelation");
  // B vanishes on L iff it vanishes on all pairs of basis vectors.
  const Matrix& g = form_->gram();
  Matrix a1 = first_block(space_), a2 = second_block(space_);
  isotropic_ = (a1 * g * a1.transpose() - a2 * g * a2.transpose()).is_zero();
}

LinearRelation LinearRelation::diagonal(FormPtr form) {
  const std::size_t n = form->dim();
  return graph(std::move(form), Matrix::identity(n));
}

LinearRelation LinearRelation::graph(FormPtr form, const Matrix& g) {
  const std::size_t n = form->dim();
  require_dims(g.rows(), n, "graph");
  require_dims(g.cols(), n, "graph");
  return LinearRelation(form, Subspace(2 * n, hconcat(Matrix::identity(n), g.transpose())));
}

Subspace first_factor(const Subspace& s) { return Subspace(s.ambient_dim() / 2, first_block(s)); }
Subspace second_factor(const Subspace& s) { return Subspace(s.ambient_dim() / 2, second_block(s)); }

Subspace LinearRelation::p1() const { return first_factor(space_); }
Subspace LinearRelation::p2() const { return second_factor(space_); }

Subspace LinearRelation::k1() const {
  Matrix s = nullspace(first_block(space_).transpose());
  return Subspace(2 * n(), s * space_.basis());
}

Subspace LinearRelation::k2() const {
  Matrix s = nullspace(second_block(space_).transpose());
  return Subspace(2 * n(), s * space_.basis());
}

bool LinearRelation::contains(const Vector& x, const Vector& y) const {
  require_dims(x.size(), n(), "LinearRelation::contains");
  require_dims(y.size(), n(), "LinearRelation::contains");
  return space_.contains(concat(x, y));
}

bool is_isotropic(const LinearRelation& l) { return l.is_isotropic(); }
bool is_lagrangian(const LinearRelation& l) { return l.is_lagrangian(); }

LinearRelation compose(const LinearRelation& l, const LinearRelation& l_prime) {
  if (!same_form(l.form_ptr(), l_prime.form_ptr()))
    throw DimensionMismatch("compose: relations live on different forms");
  const std::size_t n = l.n();
  Matrix a1 = first_block(l.space()), a2 = second_block(l.space());
  Matrix b1 = first_block(l_prime.space()), b2 = second_block(l_prime.space());
  const std::size_t a = a1.rows(), b = b1.rows();

  // Fiber product: (s, t) with s A2 = t B1, i.e. the left kernel of [A2; -B1].
  Matrix stacked = a2;
  stacked.append_rows(Rational(-1) * b1);
  Matrix fiber = nullspace(stacked.transpose());

  Matrix x = fiber.col_block(0, a) * a1;
  Matrix z = fiber.col_block(a, b) * b2;
  return LinearRelation(l.form_ptr(), Subspace(2 * n, hconcat(x, z)));
}

LinearRelation inverse(const LinearRelation& l) {
  return LinearRelation(l.form_ptr(), Subspace(2 * l.n(), hconcat(second_block(l.space()),
                                                                  first_block(l.space()))));
}

std::size_t atypicality(const LinearRelation& l) {
  require_lagrangian(l, "atypicality");
  const std::size_t k1 = l.k1().dim(), k2 = l.k2().dim();
  if (k1 != k2) throw InvariantViolation("lagrangian relation with dim K1 != dim K2");
  return k1;
}

LinearRelation idempotent_for(const FormPtr& form, const Subspace& v0) {
  require_dims(v0.ambient_dim(), form->dim(), "idempotent_for");
  Subspace v1 = orth_complement(*form, v0);
  if (!v0.contains(v1)) throw NotCoisotropic("idempotent_for: V0 is not coisotropic");
  const std::size_t n = form->dim();
  Matrix rows(0, 2 * n);
  for (std::size_t i = 0; i < v0.dim(); ++i) {
    Vector v = v0.basis_vector(i);
    rows.append_row(concat(v, v));
  }
  for (std::size_t i = 0; i < v1.dim(); ++i) rows.append_row(concat(Vector(n), v1.basis_vector(i)));
  return LinearRelation(form, Subspace(2 * n, rows));
}

Subspace classify_idempotent(const LinearRelation& e) {
  require_lagrangian(e, "classify_idempotent");
  if (!(compose(e, e) == e)) throw PreconditionError("classify_idempotent: E o E != E");
  Subspace v0 = e.p1();
  if (!(idempotent_for(e.form_ptr(), v0) == e))
    throw InvariantViolation("idempotent lagrangian relation differs from E_{p1(E)}");
  return v0;
}

// ---------------------------------------------------------------------------

bool is_isometry(const BilinearForm& form, const Matrix& g) {
  if (g.rows() != form.dim() || g.cols() != form.dim()) return false;
  return g.transpose() * form.gram() * g == form.gram();
}

Isometry::Isometry(Matrix g, FormPtr form) : g_(std::move(g)), form_(std::move(form)) {
  if (!is_isometry(*form_, g_)) throw PreconditionError("matrix is not an isometry of the form");
}

Isometry Isometry::inverse() const { return Isometry(lagrel::inverse(g_), form_); }

Isometry operator*(const Isometry& a, const Isometry& b) { return Isometry(a.g_ * b.g_, a.form_); }

Matrix reflection(const BilinearForm& form, const Vector& a) {
  const Rational q = form.norm(a);
  if (sgn(q) == 0) throw PreconditionError("reflection in an isotropic vector");
  const std::size_t n = form.dim();
  Vector ga = form.gram() * a;
  Matrix s = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(ga[j]) != 0) s(i, j) -= 2 * a[i] * ga[j] / q;
  }
  return s;
}

// ---------------------------------------------------------------------------

CanonicalData canonical_data(const LinearRelation& l) {
  require_lagrangian(l, "canonical_data");
  const BilinearForm& form = l.form();
  CanonicalData out{l.p1(), l.p2(), {}};
  QuotientSpace q = quotient(form, out.v0);
  QuotientSpace qp = quotient(form, out.v0_prime);
  if (q.dim() != qp.dim()) throw InvariantViolation("canonical_data: quotient dimensions differ");

  Matrix a1 = first_block(l.space()), a2 = second_block(l.space());
  out.alpha = Matrix(q.dim(), q.dim());
  for (std::size_t j = 0; j < q.dim(); ++j) {
    auto s = solve_left(a1, q.lifts.row_vector(j));
    if (!s) throw InvariantViolation("canonical_data: lift not in p1(L)");
    Vector image = qp.project(row_times(*s, a2));
    for (std::size_t i = 0; i < q.dim(); ++i) out.alpha(i, j) = image[i];
  }
  return out;
}

LinearRelation reconstruct(const FormPtr& form, const CanonicalData& data) {
  QuotientSpace q = quotient(*form, data.v0);
  QuotientSpace qp = quotient(*form, data.v0_prime);
  const std::size_t k = q.dim();
  if (qp.dim() != k || data.alpha.rows() != k || data.alpha.cols() != k)
    throw DimensionMismatch("reconstruct: quotient dimensions do not match alpha");
  if (!(data.alpha.transpose() * qp.induced_form.gram() * data.alpha == q.induced_form.gram()))
    throw PreconditionError("reconstruct: alpha is not an isometry of the induced forms");

  const std::size_t n = form->dim();
  Matrix rows(0, 2 * n);
  Matrix images = data.alpha.transpose() * qp.lifts;  // row j: sum_i alpha(i, j) lift'_i
  for (std::size_t j = 0; j < k; ++j) rows.append_row(concat(q.lifts.row_vector(j), images.row_vector(j)));
  for (std::size_t i = 0; i < q.v1.dim(); ++i) rows.append_row(concat(q.v1.basis_vector(i), Vector(n)));
  for (std::size_t i = 0; i < qp.v1.dim(); ++i) rows.append_row(concat(Vector(n), qp.v1.basis_vector(i)));
  LinearRelation l(form, Subspace(2 * n, rows));
  if (!l.is_lagrangian()) throw InvariantViolation("reconstruct: result is not Lagrangian");
  return l;
}

}  // namespace lagrel
