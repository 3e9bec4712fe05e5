#include "lagrel/random.hpp"

#include <algorithm>

namespace lagrel {

Rational random_rational(Rng& rng, int range, int max_den) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Vector random_vector(Rng& rng, std::size_t n, int range, int max_den) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng, range, max_den);
  return v;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  // Unit lower times unit upper triangular, then a row permutation.
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = entry(rng);
      upper(j, i) = entry(rng);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return (lower * upper).select_rows(perm);
}

RandomSpace random_space(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> planes_dist(0, n / 2);
  const std::size_t planes = planes_dist(rng);
  Matrix d(n, n);
  std::uniform_int_distribution<int> diag(1, 2);
  std::bernoulli_distribution negative(0.5);
  for (std::size_t p = 0; p < planes; ++p) {
    d(2 * p, 2 * p + 1) = 1;
    d(2 * p + 1, 2 * p) = 1;
  }
  for (std::size_t i = 2 * planes; i < n; ++i) d(i, i) = negative(rng) ? -diag(rng) : diag(rng);

  // G = P^T D P, so v is isotropic for G iff P v is isotropic for D.
  Matrix p = random_invertible(rng, n);
  Matrix p_inv = inverse(p);
  RandomSpace out;
  out.form = make_form(BilinearForm(p.transpose() * d * p));
  for (std::size_t k = 0; k < planes; ++k) out.isotropic.push_back(p_inv.col_vector(2 * k));
  return out;
}

Matrix random_isometry(Rng& rng, const BilinearForm& form, std::size_t max_reflections) {
  std::uniform_int_distribution<std::size_t> count(1, max_reflections);
  Matrix g = Matrix::identity(form.dim());
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    Vector a;
    do {
      a = random_vector(rng, form.dim(), 2, 1);
    } while (sgn(form.norm(a)) == 0);
    g = reflection(form, a) * g;
  }
  return g;
}

Subspace random_coisotropic(Rng& rng, const RandomSpace& space) {
  const std::size_t n = space.form->dim();
  std::uniform_int_distribution<std::size_t> size(0, space.isotropic.size());
  std::vector<Vector> chosen = space.isotropic;
  std::shuffle(chosen.begin(), chosen.end(), rng);
  chosen.resize(size(rng));
  Matrix g = random_isometry(rng, *space.form);
  std::vector<Vector> moved;
  for (const auto& v : chosen) moved.push_back(g * v);
  return orth_complement(*space.form, Subspace::span(n, moved));
}

LinearRelation random_lagrangian(Rng& rng, const RandomSpace& space) {
  const auto& form = space.form;
  LinearRelation e = idempotent_for(form, random_coisotropic(rng, space));
  LinearRelation g = LinearRelation::graph(form, random_isometry(rng, *form));
  LinearRelation h = LinearRelation::graph(form, random_isometry(rng, *form));
  return compose(compose(h, e), g);
}

}  // namespace lagrel
