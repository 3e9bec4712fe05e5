#include <doctest.h>

#include "lagrel/error.hpp"
#include "lagrel/random.hpp"
#include "lagrel/verify.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Vector sample(Rng& rng, const Subspace& s) {
  Vector out(s.ambient_dim(), 0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Rational c = random_rational(rng);
    const Vector b = s.basis_vector(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("monomial bases") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint32_t d = 0; d <= 5; ++d) {
      CHECK(monomial_count(n, d) == binomial(n + d - 1, d));
      CHECK(MonomialBasis::get(n, d).size() == oracle::monomials(n, d).size());
    }
  const auto& b = MonomialBasis::get(3, 2);
  CHECK(b[0] == Exponent{2, 0, 0});
  CHECK(b[b.size() - 1] == Exponent{0, 0, 2});
  CHECK(GrlexLess{}(Exponent{0, 1}, Exponent{1, 0}));
  CHECK(GrlexLess{}(Exponent{1, 0}, Exponent{0, 2}));
}

TEST_CASE("polynomial arithmetic") {
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const auto f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.evaluate(vec({3, 2})) == 5);
  CHECK(f.leading_term().first == Exponent{2, 0});
  CHECK((f - f).is_zero());
  CHECK(Polynomial(2).degree() == -1);
  CHECK(Polynomial::from_coefficients(2, 2, f.coefficients(2)) == f);
  CHECK_FALSE((x + Polynomial::constant(2, 1)).is_homogeneous());
}

TEST_CASE("substitution matches evaluation") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    Polynomial f(3);
    for (const auto& e : oracle::monomials(3, 3)) f.add_term(e, random_rational(rng));
    Matrix a(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = random_rational(rng);
    const auto g = f.substitute(a);
    const Vector tpt = random_vector(rng, 2);
    CHECK(g.evaluate(tpt) == f.evaluate(row_times(tpt, a)));
    const Matrix s = substitution_matrix(a, 3);
    CHECK(Polynomial::from_coefficients(2, 3, s * f.coefficients(3)) == g);
  }
}

TEST_CASE("trivial relation: every monomial is invariant") {
  const auto form = make_form(BilinearForm::diagonal({q(1), q(-1), q(2)}));
  const auto r = trivial_relation(form);
  for (std::uint32_t d = 0; d <= 4; ++d) CHECK(invariant_space(r, d).dim() == monomial_count(3, d));
}

TEST_CASE("baby example and gl(1|1): dim Inv_d = d") {
  Rng rng(43);
  const auto baby = baby_relation();
  const auto r11 = build_relation(gl(1, 1));
  CHECK(invariant_space(baby, 0).dim() == 1);
  for (std::uint32_t d = 1; d <= 6; ++d) {
    CHECK(invariant_space(baby, d).dim() == d);
    CHECK(invariant_space(r11, d).dim() == d);
    CHECK(oracle::invariant_dim(pair_rows(baby), 2, d, rng) == d);
    CHECK(oracle::invariant_dim(pair_rows(r11), 2, d, rng) == d);
  }
}

TEST_CASE("invariant dimensions match the sampling oracle on catalog entries") {
  Rng rng(47);
  for (const auto& rs : {gl(2, 1), gl(1, 2), osp(1, 2), osp(3, 2)}) {
    const auto r = build_relation(rs);
    for (std::uint32_t d = 1; d <= 3; ++d)
      CHECK(invariant_space(r, d).dim() == oracle::invariant_dim(pair_rows(r), r.n(), d, rng));
  }
}

TEST_CASE("invariants take equal values on sampled component points") {
  Rng rng(53);
  const auto r = build_relation(gl(2, 1));
  for (std::uint32_t d = 1; d <= 3; ++d) {
    const auto basis = invariant_space(r, d).basis();
    for (const auto& l : r.components())
      for (int k = 0; k < 100; ++k) {
        const Vector xy = sample(rng, l.space());
        const Vector x(xy.begin(), xy.begin() + 3), y(xy.begin() + 3, xy.end());
        for (const auto& g : basis) CHECK(g.evaluate(x) == g.evaluate(y));
      }
  }
}

TEST_CASE("invariant_space and invariant_space_ref agree") {
  const auto r = build_relation(gl(2, 2));
  for (std::uint32_t d = 0; d <= 4; ++d) CHECK(invariant_space(r, d).space == invariant_space_ref(r, d).space);
}

TEST_CASE("Weyl invariants") {
  const auto form = make_form(BilinearForm::diagonal({q(1), q(1)}));
  const std::vector<Isometry> trivial{Isometry(Matrix::identity(2), form)};
  CHECK(weyl_invariant_space(trivial, 3).dim() == 4);

  const std::vector<Isometry> s2{Isometry(Matrix::identity(2), form),
                                 Isometry(Matrix{{0, 1}, {1, 0}}, form)};
  const auto sym = weyl_invariant_space(s2, 2);
  CHECK(sym.dim() == 2);
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  CHECK(sym.contains(x * x + y * y));
  CHECK(sym.contains(x * y));
  CHECK_FALSE(sym.contains(x * x));

  const auto w21 = weyl_group(gl(2, 1));
  const auto lin = weyl_invariant_space(w21, 1);
  CHECK(lin.dim() == 2);
  CHECK(lin.contains(Polynomial::linear(vec({1, 1, 0}))));
  CHECK(lin.contains(Polynomial::linear(vec({0, 0, 1}))));

  for (const auto& rs : {gl(2, 1), gl(2, 2), gl(3, 1)}) {
    const auto w = weyl_group(rs);
    for (std::uint32_t d = 0; d <= 4; ++d)
      CHECK(weyl_invariant_space(w, d).space == reynolds_invariant_space(w, d).space);
  }
}

TEST_CASE("R-invariants are W-invariants") {
  for (const auto& rs : {gl(2, 1), gl(2, 2)}) {
    const auto r = build_relation(rs);
    const auto w = weyl_group(r);
    for (std::uint32_t d = 1; d <= 4; ++d)
      CHECK(weyl_invariant_space(w, d).space.contains(invariant_space(r, d).space));
  }
}

TEST_CASE("discriminant polynomial") {
  const auto r11 = build_relation(gl(1, 1));
  const auto t11 = discriminant_polynomial(r11);
  CHECK(t11.degree == 1);
  CHECK_FALSE(t11.squared);
  CHECK(t11.t.evaluate(vec({1, -1})) == 0);
  CHECK(t11.t.leading_term().second == 1);

  const auto rs = gl(2, 1);
  const auto r = build_relation(rs);
  const auto t = discriminant_polynomial(r);
  CHECK(t.degree == 2);
  CHECK(t.hyperplanes.size() == 2);
  CHECK(t.t.leading_term().second == 1);
  for (const auto& h : t.hyperplanes)
    for (std::size_t i = 0; i < h.dim(); ++i) CHECK(t.t.evaluate(h.basis_vector(i)) == 0);
  // T times W-invariants lands in the R-invariants.
  const auto w = weyl_group(r);
  for (std::uint32_t d = 0; d <= 3; ++d) {
    const auto inv = invariant_space(r, d + t.degree);
    for (const auto& g : weyl_invariant_space(w, d).basis()) CHECK(inv.contains(t.t * g));
  }

  const auto form = make_form(BilinearForm::diagonal({q(1), q(1)}));
  CHECK_THROWS_AS(discriminant_polynomial(trivial_relation(form)), PreconditionError);
}

TEST_CASE("restriction map") {
  const auto rs = gl(2, 1);
  const auto r = build_relation(rs);
  const auto v0 = orth_complement(rs.form(), Subspace::span(3, {vec({1, 0, -1})}));
  const auto m0 = restriction_map(r, v0, 0);
  CHECK(m0.matrix == Matrix::identity(1));

  const auto t = discriminant_polynomial(r);
  const auto w = weyl_group(r);
  for (std::uint32_t d = 1; d <= 6; ++d) {
    const auto m = restriction_map(r, v0, d);
    CHECK(m.rank == m.target.dim());
    const std::size_t kernel = m.source.dim() - m.rank;
    const std::size_t expected = d >= t.degree ? weyl_invariant_space(w, d - t.degree).dim() : 0;
    CHECK(kernel == expected);
  }
}

TEST_CASE("separation") {
  const auto r = build_relation(gl(1, 1));
  const Vector x = vec({2, 5});
  auto res = separate(r, x, x, 6);
  CHECK(res.equivalent);
  CHECK_FALSE(res.certificate);

  // The only linear invariant is <alpha|.> = x1 + x2, equal to 1 on both e_eps
  // and e_delta; the quadratic form separates them.
  res = separate(r, vec({1, 0}), vec({0, 1}), 6);
  CHECK_FALSE(res.equivalent);
  REQUIRE(res.certificate);
  CHECK(res.certificate->degree == 2);
  CHECK(res.certificate->value_x != res.certificate->value_y);
  CHECK(res.certificate->invariant.evaluate(vec({1, 0})) == res.certificate->value_x);

  res = separate(r, vec({1, 0}), vec({0, -1}), 6);
  REQUIRE(res.certificate);
  CHECK(res.certificate->degree == 1);

  res = separate(r, vec({0, 0}), vec({1, -1}), 6);
  CHECK(res.equivalent);
  CHECK_FALSE(res.certificate);
  CHECK_FALSE(res.exhausted);
}

TEST_CASE("product formula") {
  const auto r11 = build_relation(gl(1, 1));
  for (std::uint32_t d = 0; d <= 4; ++d) CHECK(product_invariant_check(r11, r11, d).holds());

  const auto point = trivial_relation(make_form(BilinearForm(Matrix(0, 0))));
  CHECK(product_invariant_check(r11, point, 3).holds());

  const auto f1 = make_form(BilinearForm::diagonal({q(1), q(1)}));
  const auto f2 = make_form(BilinearForm::diagonal({q(1)}));
  for (std::uint32_t d = 0; d <= 4; ++d) {
    const auto c = product_invariant_check(trivial_relation(f1), trivial_relation(f2), d);
    CHECK(c.holds());
    CHECK(c.direct == monomial_count(3, d));
  }
}

TEST_CASE("independent points give an invertible value matrix") {
  Rng rng(59);
  const auto r = build_relation(gl(2, 1));
  for (std::uint32_t d = 1; d <= 3; ++d) {
    const auto family = invariant_space(r, d).basis();
    const auto pts = independent_points(family, rng);
    REQUIRE(pts);
    Matrix values(family.size(), family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j) values(i, j) = family[i].evaluate((*pts)[j]);
    CHECK(oracle::rank(rows_of(values)) == family.size());
  }
  const auto x = Polynomial::variable(2, 0);
  CHECK_FALSE(independent_points({x, x + x}, rng, 8));
}
