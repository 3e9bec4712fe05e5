// Acceptance run: one PASS/FAIL line per criterion. Tolerances are exact
// (zero) throughout; time limits are pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lagrel/error.hpp"
#include "lagrel/random.hpp"
#include "lagrel/verify.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) o.require(false, "time limit exceeded");
  if (!o.ok) ++failures;
  std::printf("%s [%d] %s (%.2fs", o.ok ? "PASS" : "FAIL", id, name, secs);
  if (limit_s > 0) std::printf(", limit %.0fs", limit_s);
  std::printf(")%s%s\n", o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

// Isotropy of a relation evaluated from the gram matrix alone.
bool oracle_isotropic(const LinearRelation& l) {
  const Matrix& g = l.form().gram();
  const std::size_t n = l.n();
  const auto rows = rows_of(l.space());
  for (const auto& a : rows)
    for (const auto& b : rows) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          s += a[i] * g(i, j) * b[j] - a[n + i] * g(i, j) * b[n + j];
      if (s != 0) return false;
    }
  return true;
}

// dim {(0, w) in L} and dim {(v, 0) in L} by the rank oracle.
std::pair<std::size_t, std::size_t> oracle_kernels(const LinearRelation& l) {
  const std::size_t n = l.n();
  oracle::Rows left, right;
  for (std::size_t j = 0; j < n; ++j) {
    oracle::Vec a(2 * n, 0), b(2 * n, 0);
    a[n + j] = 1;
    b[j] = 1;
    left.push_back(a);
    right.push_back(b);
  }
  const auto rows = rows_of(l.space());
  return {oracle::intersection_dim(rows, left), oracle::intersection_dim(rows, right)};
}

struct Corpus {
  struct Pair {
    LinearRelation l, lp, c;
  };
  std::vector<Pair> pairs;
  std::vector<FormPtr> forms;
};

Corpus make_corpus() {
  Corpus c;
  Rng rng(20240501);
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + i % 5;
    const auto space = random_space(rng, n);
    auto l = random_lagrangian(rng, space);
    auto lp = random_lagrangian(rng, space);
    auto comp = compose(l, lp);
    c.pairs.push_back({std::move(l), std::move(lp), std::move(comp)});
    c.forms.push_back(space.form);
  }
  return c;
}

std::vector<std::pair<int, int>> gl_upto(int rank) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m < rank; ++m)
    for (int n = 1; m + n <= rank; ++n) out.emplace_back(m, n);
  return out;
}

std::string name(const char* fam, int m, int n) {
  return std::string(fam) + "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
}

bool in_w(const std::vector<Isometry>& w, const Isometry& g) {
  return std::find(w.begin(), w.end(), g) != w.end();
}

bool plus_minus(const Vector& a, const Vector& b) {
  if (a == b) return true;
  Vector neg = b;
  for (auto& x : neg) x = -x;
  return a == neg;
}

// Exhaustive inclusion-maximal orthogonal subsets of isotropic pairs.
std::vector<std::vector<Vector>> brute_maximal_isosets(const RootSystem& rs) {
  const auto reps = rs.isotropic_pairs();
  const std::size_t k = reps.size();
  std::vector<std::uint64_t> cliques;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && rs.form().pair(reps[i], reps[j]) != 0) ok = false;
    if (ok) cliques.push_back(mask);
  }
  std::vector<std::vector<Vector>> out;
  for (auto m : cliques) {
    bool maximal = true;
    for (auto o : cliques)
      if (o != m && (o & m) == m) maximal = false;
    if (!maximal) continue;
    std::vector<Vector> s;
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1) s.push_back(reps[i]);
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  std::printf("lagrel acceptance\n");
  std::fflush(stdout);

  Corpus corpus;

  criterion(1, "monoid laws: 1000 random compositions are lagrangian of dim n", 30, [&](Outcome& o) {
    corpus = make_corpus();
    for (const auto& p : corpus.pairs) {
      const std::size_t n = p.l.n();
      o.require(p.c.dim() == n, "composition has wrong dimension");
      o.require(oracle_isotropic(p.c), "composition is not isotropic");
      o.require(oracle_isotropic(p.l) && oracle_isotropic(p.lp), "input not isotropic");
    }
    o.require(corpus.pairs.size() == 1000, "corpus size");
  });

  criterion(2, "atypicality: dim K1 = dim K2 and max(a, a') <= a(L' o L) <= a + a'", 0, [&](Outcome& o) {
    for (const auto& p : corpus.pairs) {
      for (const auto* l : {&p.l, &p.lp, &p.c}) {
        const auto [k1, k2] = oracle_kernels(*l);
        o.require(k1 == k2, "dim K1 != dim K2");
        o.require(atypicality(*l) == k1, "atypicality disagrees with the rank oracle");
      }
      const std::size_t a = atypicality(p.l), ap = atypicality(p.lp), ac = atypicality(p.c);
      o.require(std::max(a, ap) <= ac && ac <= a + ap, "atypicality inequality");
    }
    o.require(!corpus.pairs.empty(), "empty corpus");
  });

  criterion(3, "structure identities: p1 = p1(K2)^perp, L^-1 o L = E_p1, idempotents, canonical data", 0,
            [&](Outcome& o) {
              for (std::size_t i = 0; i < corpus.pairs.size(); ++i) {
                const auto& form = corpus.forms[i];
                const auto& p = corpus.pairs[i];
                for (const auto* l : {&p.l, &p.lp, &p.c}) {
                  o.require(l->p1() == orth_complement(*form, first_factor(l->k2())), "p1(L) != p1(K2)^perp");
                  const auto e = compose(*l, inverse(*l));
                  o.require(e == idempotent_for(form, l->p1()), "L^-1 o L != E_p1(L)");
                  o.require(compose(e, e) == e, "L^-1 o L not idempotent");
                  o.require(e == idempotent_for(form, e.p1()), "idempotent != E_p1(E)");
                  o.require(reconstruct(form, canonical_data(*l)) == *l, "canonical data round trip");
                }
              }
              o.require(!corpus.pairs.empty(), "empty corpus");
            });
  corpus = Corpus{};

  criterion(4, "WGRS closure matches {Gamma_w o E_S^perp} for gl(m|n), m+n <= 5, and osp(3|2)", 120,
            [&](Outcome& o) {
              std::vector<std::pair<std::string, RootSystem>> systems;
              for (const auto& [m, n] : gl_upto(5)) systems.emplace_back(name("gl", m, n), gl(m, n));
              systems.emplace_back("osp(3|2)", osp(3, 2));
              for (const auto& [label, rs] : systems) {
                const auto r = build_relation(rs);
                std::vector<LinearRelation> expected;
                for (const auto& w : weyl_group(rs))
                  for (const auto& s : all_isosets(rs)) {
                    const auto e = idempotent_for(rs.form_ptr(), orth_complement(rs.form(), s.span(rs.n())));
                    auto l = compose(e, LinearRelation::graph(rs.form_ptr(), w.matrix()));
                    if (std::find(expected.begin(), expected.end(), l) == expected.end())
                      expected.push_back(std::move(l));
                  }
                for (const auto& l : expected) o.require(r.has_component(l), label + ": missing Gamma_w o E");
                for (const auto& l : r.components())
                  o.require(std::find(expected.begin(), expected.end(), l) != expected.end(),
                            label + ": extra component");
              }
            });

  criterion(5, "iso-sets: equal maximal cardinality, verified transport for m+n <= 4", 0, [&](Outcome& o) {
    for (const auto& entry : catalog_entries(5)) {
      const auto rs = catalog(entry.first, entry.second);
      const auto label = entry_name(entry);
      const auto brute = brute_maximal_isosets(rs);
      std::vector<std::vector<Vector>> lib;
      for (const auto& s : maximal_isosets(rs)) lib.push_back(s.reps);
      std::sort(lib.begin(), lib.end());
      o.require(lib == brute, label + ": maximal iso-sets differ from exhaustive search");
      for (const auto& s : brute) o.require(s.size() == brute.front().size(), label + ": unequal cardinality");
      if (entry.first == "gl")
        o.require(!brute.empty() &&
                      brute.front().size() == static_cast<std::size_t>(std::min(entry.second[0], entry.second[1])),
                  label + ": cardinality != min(m, n)");
    }
    for (const auto& [m, n] : gl_upto(4)) {
      const auto rs = gl(m, n);
      const auto w = weyl_group(rs);
      Vector rho(rs.n(), 0);
      for (int i = 0; i < m + n; ++i) rho[i] = i < m ? 1 : -1;
      for (const Vector& v : {Vector(rs.n(), 0), rho}) {
        const auto mx = maximal_isosets(rs, v);
        o.require(!mx.empty(), name("gl", m, n) + ": no maximal iso-set");
        for (const auto& s : mx)
          for (const auto& sp : mx) {
            const auto t = transport_isoset(rs, v, s, sp);
            o.require(in_w(w, t), "transport witness not in W");
            o.require(t(v) == v, "transport witness moves v");
            for (const auto& r : s.reps) {
              const Vector img = t(r);
              o.require(std::any_of(sp.reps.begin(), sp.reps.end(),
                                    [&](const Vector& x) { return plus_minus(img, x); }),
                        "w(S) != S'");
            }
          }
      }
    }
  });

  criterion(6, "two-step witnesses on gl(2|2) and gl(3|2)", 0, [&](Outcome& o) {
    for (const auto& rs : {gl(2, 2), gl(3, 2)}) {
      const auto w = weyl_group(rs);
      const auto iso = rs.isotropic_roots();
      const Isometry id(Matrix::identity(rs.n()), rs.form_ptr());
      for (const auto& b : iso)
        for (const auto& bp : iso) {
          const auto t = two_step_witness(rs, b, bp);
          o.require(in_w(w, t), "witness not in W");
          o.require(plus_minus(t(b), bp), "w(beta) != +-beta'");
          if (rs.form().pair(b, bp) != 0 || plus_minus(b, bp)) continue;
          o.require(t * t == id, "w^2 != id in the orthogonal case");
          const auto v1 = Subspace::span(rs.n(), {b, bp});
          const auto v0 = orth_complement(rs.form(), v1);
          for (std::size_t i = 0; i < v0.dim(); ++i) {
            Vector d = t(v0.basis_vector(i));
            const Vector x = v0.basis_vector(i);
            for (std::size_t j = 0; j < d.size(); ++j) d[j] -= x[j];
            o.require(v1.contains(d), "w does not act trivially on V0/V1");
          }
        }
    }
  });

  criterion(7, "reduction coherence: build(reduce_by_root) = reduce(build) on gl(1|1), gl(2|1), gl(2|2)", 60,
            [&](Outcome& o) {
              for (const auto& rs : {gl(1, 1), gl(2, 1), gl(2, 2)}) {
                const auto r = build_relation(rs);
                for (const auto& alpha : rs.isotropic_roots()) {
                  const auto v0 = orth_complement(rs.form(), Subspace::span(rs.n(), {alpha}));
                  const auto lhs = build_relation(reduce_by_root(rs, alpha));
                  const auto rhs = reduce(r, v0);
                  o.require(lhs == rhs, "component sets differ");
                }
              }
            });

  criterion(8, "semiregularity of every catalog entry with m+n <= 5", 0, [&](Outcome& o) {
    for (const auto& entry : catalog_entries(5)) {
      const auto r = build_relation(catalog(entry.first, entry.second));
      const auto res = is_semiregular(r);
      o.require(res.holds, entry_name(entry) + ": " + res.diagnostic);
    }
  });

  criterion(9, "baby example and gl(1|1): dim Inv_d = d for d = 1..6", 0, [&](Outcome& o) {
    Rng rng(9);
    const auto baby = baby_relation();
    const auto r11 = build_relation(gl(1, 1));
    for (std::uint32_t d = 1; d <= 6; ++d) {
      const std::size_t expected = oracle::invariant_dim(pair_rows(baby), 2, d, rng);
      o.require(expected == d, "oracle profile differs from 1..6");
      o.require(invariant_space(baby, d).dim() == expected, "baby dimension");
      o.require(invariant_space(r11, d).dim() == expected, "gl(1|1) dimension");
    }
  });

  criterion(10, "graded exact sequence on gl(2|1) and gl(2|2), d <= 6", 180, [&](Outcome& o) {
    for (const auto& rs : {gl(2, 1), gl(2, 2)}) {
      const auto r = build_relation(rs);
      const auto reg = is_one_regular(r);
      o.require(reg.holds && reg.witness.has_value(), "not 1-regular");
      if (!reg.witness) return;
      const auto t = discriminant_polynomial(r);
      const auto w = weyl_group(r);
      const auto reduced = reduce(r, *reg.witness);
      for (std::uint32_t d = 0; d <= 6; ++d) {
        const std::size_t inv = invariant_space(r, d).dim();
        const std::size_t kernel = d >= t.degree ? weyl_invariant_space(w, d - t.degree).dim() : 0;
        const std::size_t image = invariant_space(reduced, d).dim();
        o.require(inv == kernel + image, "dim Inv_d(R) != dim Inv_{d-deg T}(W) + dim Inv_d(R')");
        const auto m = restriction_map(r, *reg.witness, d);
        o.require(m.rank == m.target.dim(), "restriction map not surjective");
        o.require(m.source.dim() - m.rank == kernel, "kernel dimension");
      }
    }
  });

  criterion(11, "product formula for gl(1|1) x gl(1|1), d <= 4", 0, [&](Outcome& o) {
    Rng rng(11);
    const auto r11 = build_relation(gl(1, 1));
    const auto prod = product(r11, r11);
    for (std::uint32_t d = 0; d <= 4; ++d) {
      const auto c = product_invariant_check(r11, r11, d);
      o.require(c.holds(), "direct != convolution");
      o.require(c.direct == oracle::invariant_dim(pair_rows(prod), 4, d, rng), "direct side vs oracle");
    }
  });

  criterion(12, "detectability sampling on gl(2|1)", 0, [&](Outcome& o) {
    const auto rs = gl(2, 1);
    const auto r = build_relation(rs);
    const auto pieces = invariant_pieces(r, 6);
    std::vector<std::vector<Polynomial>> bases;
    for (const auto& p : pieces) bases.push_back(p.basis());
    auto all_agree = [&](const Vector& x, const Vector& y) {
      for (const auto& b : bases)
        for (const auto& f : b)
          if (f.evaluate(x) != f.evaluate(y)) return false;
      return true;
    };
    auto oracle_member = [&](const Vector& x, const Vector& y) {
      for (const auto& l : r.components())
        if (oracle::in_span(rows_of(l.space()), join(x, y))) return true;
      return false;
    };

    Rng rng(12);
    std::size_t members = 0, random_separated = 0, random_non = 0;
    for (int i = 0; i < 200; ++i) {
      Vector x, y;
      if (i % 2 == 0) {
        const auto& l = r.components()[rng() % r.size()];
        Vector xy(6, 0);
        for (std::size_t k = 0; k < l.dim(); ++k) {
          const Rational c = random_rational(rng);
          const Vector b = l.space().basis_vector(k);
          for (std::size_t j = 0; j < 6; ++j) xy[j] += c * b[j];
        }
        x.assign(xy.begin(), xy.begin() + 3);
        y.assign(xy.begin() + 3, xy.end());
      } else {
        x = random_vector(rng, 3);
        y = random_vector(rng, 3);
      }
      const bool member = membership(r, x, y);
      o.require(member == oracle_member(x, y), "membership disagrees with the oracle");
      if (member) {
        ++members;
        o.require(all_agree(x, y), "an invariant separates an equivalent pair");
      } else {
        ++random_non;
        if (separate(r, pieces, x, y).certificate) ++random_separated;
      }
    }
    o.require(members >= 100, "too few equivalent samples");

    // Non-equivalent pairs; the super power sums x1^k + x2^k - (-x3)^k are
    // invariants, so each pair differs at the listed degree or below.
    const std::vector<std::pair<Vector, Vector>> curated{
        {vec({1, 0, 0}), vec({2, 0, 0})},       {vec({0, 0, 0}), vec({1, 1, 1})},
        {vec({1, 2, 3}), vec({3, 2, 3})},       {vec({-1, 2, 0}), vec({2, 2, 0})},
        {vec({0, 0, 1}), vec({0, 0, -1})},      {vec({-3, -3, -3}), vec({-3, -2, -1})},
        {vec({1, 2, 5}), vec({1, 5, 2})},       {vec({-3, -3, -2}), vec({-3, -2, -3})},
        {vec({-3, -3, -1}), vec({-2, -2, -3})}, {vec({-3, -3, 0}), vec({-2, -1, -3})},
        {vec({2, 0, 0}), vec({0, 0, 2})},       {vec({1, 1, 0}), vec({0, 0, 2})},
        {vec({3, 0, 0}), vec({0, 0, 3})},       {vec({-3, 0, -1}), vec({-2, -2, 0})},
        {vec({-3, 0, 2}), vec({-2, 1, 0})},     {vec({-3, 0, 2}), vec({1, -2, 0})},
        {vec({-3, 1, -3}), vec({-2, -1, -2})},  {vec({-3, 1, 1}), vec({-2, 3, -2})},
        {vec({-3, 1, 1}), vec({3, -2, -2})},    {vec({-3, 1, 2}), vec({-1, 3, -2})}};
    std::size_t separated = 0;
    for (const auto& [x, y] : curated) {
      o.require(!oracle_member(x, y), "curated pair is equivalent");
      const auto res = separate(r, pieces, x, y);
      if (res.certificate && res.certificate->degree <= 6 &&
          res.certificate->invariant.evaluate(x) != res.certificate->invariant.evaluate(y))
        ++separated;
    }
    o.require(separated == curated.size(), "curated pair without a separator of degree <= 6");
    std::printf("  detectability: %zu equivalent samples, %zu/%zu random non-equivalent separated, %zu/%zu curated\n",
                members, random_separated, random_non, separated, curated.size());
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
