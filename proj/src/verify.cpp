#include "lagrel/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lagrel/error.hpp"
#include "lagrel/invariants.hpp"
#include "lagrel/random.hpp"

namespace lagrel {

namespace {

class Suite {
 public:
  explicit Suite(SuiteReport& report) : report_(report) {}

  void check(const std::string& property, bool ok, const std::string& detail = "") {
    auto& p = slot(property);
    ++p.checked;
    if (!ok && p.failed++ == 0) p.first_failure = detail.empty() ? "failed" : detail;
  }

  // Runs body; an exception counts as a failure of `property`.
  void guarded(const std::string& property, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(property, false, e.what());
    }
  }

 private:
  PropertyResult& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return report_.properties[it->second];
    index_.emplace(name, report_.properties.size());
    report_.properties.push_back(PropertyResult{name, 0, 0, {}});
    return report_.properties.back();
  }

  SuiteReport& report_;
  std::map<std::string, std::size_t> index_;
};

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

Vector sample_point(Rng& rng, const Subspace& s) {
  Vector out(s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Rational c = random_rational(rng);
    const Vector b = s.basis_vector(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * b[j];
  }
  return out;
}

std::pair<Vector, Vector> split(const Vector& xy) {
  const std::size_t n = xy.size() / 2;
  return {Vector(xy.begin(), xy.begin() + n), Vector(xy.begin() + n, xy.end())};
}

void monoid_suite(Suite& s, Rng& rng) {
  constexpr std::size_t kPairs = 1000;
  for (std::size_t i = 0; i < kPairs; ++i) {
    const std::size_t n = 2 + i % 5;
    const RandomSpace space = random_space(rng, n);
    const FormPtr& form = space.form;
    const LinearRelation l = random_lagrangian(rng, space);
    const LinearRelation lp = random_lagrangian(rng, space);
    s.guarded("composition is lagrangian of dim n", [&] {
      const LinearRelation c = compose(l, lp);
      s.check("composition is lagrangian of dim n", c.is_lagrangian() && c.dim() == n);
      const std::size_t a = atypicality(l), ap = atypicality(lp), ac = atypicality(c);
      s.check("max(a, a') <= a(L' o L) <= a + a'", std::max(a, ap) <= ac && ac <= a + ap,
              std::to_string(a) + "," + std::to_string(ap) + " -> " + std::to_string(ac));
    });
    s.guarded("dim K1 = dim K2", [&] {
      s.check("dim K1 = dim K2", l.k1().dim() == l.k2().dim() && lp.k1().dim() == lp.k2().dim());
    });
    s.guarded("p1(L) = p1(K2)^perp", [&] {
      s.check("p1(L) = p1(K2)^perp", l.p1() == orth_complement(*form, first_factor(l.k2())));
      s.check("p1(L), p2(L) coisotropic", is_coisotropic(*form, l.p1()) && is_coisotropic(*form, l.p2()));
    });
    s.guarded("L^-1 o L = E_{p1(L)}", [&] {
      const LinearRelation e = compose(l, inverse(l));
      s.check("L^-1 o L = E_{p1(L)}", e == idempotent_for(form, l.p1()));
      s.check("idempotents are E_{p1(E)}", classify_idempotent(e) == l.p1());
    });
    s.guarded("canonical data round trip", [&] {
      s.check("canonical data round trip", reconstruct(form, canonical_data(l)) == l);
    });
    s.guarded("inverse is an involution preserving a(L)", [&] {
      const LinearRelation inv = inverse(l);
      s.check("inverse is an involution preserving a(L)",
              inverse(inv) == l && inv.is_lagrangian() && atypicality(inv) == atypicality(l));
    });
    if (i % 10 == 0) {
      s.guarded("composition is associative", [&] {
        const LinearRelation lpp = random_lagrangian(rng, space);
        s.check("composition is associative",
                compose(compose(l, lp), lpp) == compose(l, compose(lp, lpp)));
      });
    }
  }
}

void wgrs_suite(Suite& s, Rng& rng) {
  for (const auto& entry : catalog_entries(4)) {
    const std::string name = entry_name(entry);
    const RootSystem rs = catalog(entry.first, entry.second);
    s.check("catalog entries validate", validate(rs).empty(), name);

    const auto group = weyl_group(rs);
    if (entry.first == "gl") {
      const auto m = static_cast<std::size_t>(entry.second[0]), n = static_cast<std::size_t>(entry.second[1]);
      s.check("|W(gl(m|n))| = m! n!", group.size() == factorial(m) * factorial(n), name);
    }

    const auto maximal = maximal_isosets(rs);
    bool equal = true;
    for (const auto& x : maximal) equal = equal && x.pairs() == maximal.front().pairs();
    s.check("maximal iso-sets have equal cardinality", equal, name);
    if (entry.first == "gl") {
      const auto defect = static_cast<std::size_t>(std::min(entry.second[0], entry.second[1]));
      s.check("gl defect = min(m, n)", maximal.front().pairs() == defect, name);
    }

    const auto iso = rs.isotropic_roots();
    for (const auto& b : iso)
      for (const auto& bp : iso)
        s.guarded("two-step witness maps beta to +-beta'", [&] {
          const Isometry w = two_step_witness(rs, b, bp);
          Vector img = w(b);
          Vector neg = bp;
          for (auto& x : neg) x = -x;
          s.check("two-step witness maps beta to +-beta'", img == bp || img == neg, name);
        });

    for (const auto& a : maximal)
      for (const auto& b : maximal)
        s.guarded("transport_isoset witnesses", [&] {
          const Vector zero(rs.n());
          const Isometry w = transport_isoset(rs, zero, a, b);
          s.check("transport_isoset witnesses", transform(w, a) == b, name);
        });

    s.guarded("build_relation components are Gamma_w o E_{S^perp}", [&] {
      const auto r = build_relation(rs);
      s.check("build_relation components are Gamma_w o E_{S^perp}", is_closed(r), name);
      for (std::size_t k = 0; k < 100; ++k) {
        Vector x, y;
        if (k % 2 == 0) {
          const auto& comp = r.components()[k / 2 % r.size()];
          std::tie(x, y) = split(sample_point(rng, comp.space()));
        } else {
          x = random_vector(rng, rs.n());
          y = random_vector(rng, rs.n());
        }
        s.check("class_membership agrees with membership",
                class_membership(rs, x, y).has_value() == membership(r, x, y), name);
      }
    });

    if (rs.size() > 0) {
      std::vector<Vector> dropped(rs.roots().begin() + 1, rs.roots().end());
      s.check("mutated root systems fail validation",
              !validate(RootSystem(rs.form_ptr(), dropped)).empty(), name);
    }
  }
}

void reduction_suite(Suite& s, Rng&) {
  for (const auto& entry : catalog_entries(4)) {
    const std::string name = entry_name(entry);
    const RootSystem rs = catalog(entry.first, entry.second);
    const auto r = build_relation(rs);
    for (const auto& alpha : rs.isotropic_pairs())
      s.guarded("reduce_by_root and reduce commute", [&] {
        const RootSystem reduced = reduce_by_root(rs, alpha);
        s.check("reduced root system validates", validate(reduced).empty(), name);
        const Subspace v0 = orth_complement(rs.form(), Subspace::span(rs.n(), {alpha}));
        s.check("reduce_by_root and reduce commute", build_relation(reduced) == reduce(r, v0), name);
      });
    s.check("reduce(R, V) = R", reduce(r, Subspace::full(rs.n())) == r, name);
    s.guarded("R is semiregular", [&] { s.check("R is semiregular", is_semiregular(r).holds, name); });
  }
}

void invariants_suite(Suite& s, Rng& rng) {
  constexpr std::uint32_t kDegree = 4;
  const auto baby = baby_relation();
  for (std::uint32_t d = 1; d <= kDegree; ++d)
    s.check("baby example dims = d", invariant_space(baby, d).dim() == d, std::to_string(d));

  for (const auto& entry : std::vector<CatalogEntry>{{"gl", {1, 1}}, {"gl", {2, 1}}, {"gl", {2, 2}}}) {
    const std::string name = entry_name(entry);
    const RootSystem rs = catalog(entry.first, entry.second);
    const auto r = build_relation(rs);
    const auto w = weyl_group(r);
    const auto t = discriminant_polynomial(r);
    const Subspace v0 = *is_one_regular(r).witness;
    const auto reduced = reduce(r, v0);
    for (std::uint32_t d = 0; d <= kDegree; ++d) {
      const auto inv = invariant_space(r, d);
      const auto winv = weyl_invariant_space(w, d);
      s.check("Inv(R) inside Inv(W)", winv.space.contains(inv.space), name);
      s.check("Weyl invariants match Reynolds averages", winv.space == reynolds_invariant_space(w, d).space, name);
      const std::size_t shifted = d >= t.degree ? weyl_invariant_space(w, d - t.degree).dim() : 0;
      s.check("graded exact sequence dims", inv.dim() == shifted + invariant_space(reduced, d).dim(),
              name + " degree " + std::to_string(d));
      s.check("restriction map is surjective", restriction_map(r, v0, d).rank == invariant_space(reduced, d).dim(), name);
      for (const auto& f : inv.basis())
        for (const auto& comp : r.components())
          for (int k = 0; k < 5; ++k) {
            auto [x, y] = split(sample_point(rng, comp.space()));
            s.check("invariants are constant on components", f.evaluate(x) == f.evaluate(y), name);
          }
    }
    const auto pieces = invariant_pieces(r, kDegree);
    for (int k = 0; k < 20; ++k) {
      const auto& comp = r.components()[static_cast<std::size_t>(k) % r.size()];
      auto [x, y] = split(sample_point(rng, comp.space()));
      s.guarded("equivalent points are never separated", [&] {
        s.check("equivalent points are never separated", !separate(r, pieces, x, y).certificate, name);
      });
    }
  }
}

void product_suite(Suite& s, Rng& rng) {
  const auto g11 = build_relation(catalog("gl", {1, 1}));
  const auto g21 = build_relation(catalog("gl", {2, 1}));
  for (std::uint32_t d = 0; d <= 4; ++d)
    s.check("gl(1|1) x gl(1|1) product formula", product_invariant_check(g11, g11, d).holds(), std::to_string(d));
  for (std::uint32_t d = 0; d <= 3; ++d)
    s.check("gl(1|1) x gl(2|1) product formula", product_invariant_check(g11, g21, d).holds(), std::to_string(d));
  const auto trivial2 = trivial_relation(make_form(BilinearForm(Matrix::identity(2))));
  for (std::uint32_t d = 0; d <= 4; ++d) {
    auto check = product_invariant_check(trivial2, trivial2, d);
    s.check("{Delta} x {Delta} binomial identity", check.holds() && check.direct == monomial_count(4, d));
  }
  const auto prod = product(g11, g11);
  s.check("gl(1|1) x gl(1|1) has 4 components", prod.size() == 4);
  s.check("gl(1|1) x gl(1|1) is not 1-regular", !is_one_regular(prod).holds);
  s.check("gl(1|1) x gl(1|1) is 1-semiregular", is_one_semiregular(prod).holds);
  for (int k = 0; k < 50; ++k) {
    Vector x = random_vector(rng, 4), y = random_vector(rng, 4);
    if (k % 2 == 0) {
      // First block on the isotropic line, shifted along it.
      x[1] = -x[0];
      y = x;
      y[0] += k;
      y[1] -= k;
    }
    const bool left = membership(g11, {x[0], x[1]}, {y[0], y[1]});
    const bool right = membership(g11, {x[2], x[3]}, {y[2], y[3]});
    s.check("product membership is coordinatewise", membership(prod, x, y) == (left && right));
  }
  for (std::uint32_t d = 1; d <= 4; ++d) {
    const auto family = invariant_space(prod, d).basis();
    auto points = independent_points(family, rng);
    bool ok = points.has_value();
    if (ok) {
      Matrix values(family.size(), family.size());
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) values(i, j) = family[i].evaluate((*points)[j]);
      ok = sgn(determinant(values)) != 0;
    }
    s.check("independent families have invertible value matrices", ok, std::to_string(d));
  }
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failed == 0; });
}

std::vector<std::string> suite_names() { return {"monoid", "wgrs", "invariants", "reduction", "product"}; }

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  static const std::map<std::string, std::function<void(Suite&, Rng&)>> suites = {
      {"monoid", monoid_suite},     {"wgrs", wgrs_suite},       {"invariants", invariants_suite},
      {"reduction", reduction_suite}, {"product", product_suite}};
  auto it = suites.find(name);
  if (it == suites.end()) throw PreconditionError("unknown suite \"" + name + "\"");
  SuiteReport report{name, seed, {}};
  Suite suite(report);
  Rng rng(seed);
  it->second(suite, rng);
  return report;
}

std::vector<CatalogEntry> catalog_entries(int max_rank, bool with_osp) {
  std::vector<CatalogEntry> out;
  for (int total = 2; total <= max_rank; ++total)
    for (int m = total - 1; m >= 1; --m) out.push_back({"gl", {m, total - m}});
  if (with_osp)
    for (auto p : {std::vector<int>{1, 2}, {2, 2}, {3, 2}}) out.push_back({"osp", p});
  return out;
}

std::string entry_name(const CatalogEntry& e) {
  return e.first + "(" + std::to_string(e.second[0]) + "|" + std::to_string(e.second[1]) + ")";
}

LagrangianEquivalenceRelation baby_relation() {
  auto form = make_form(BilinearForm(Matrix{{0, 1}, {1, 0}}));
  const Subspace line = Subspace::span(2, {Vector{1, 0}});
  return closure(form, {idempotent_for(form, line)});
}

}  // namespace lagrel
