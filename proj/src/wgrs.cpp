#include "lagrel/wgrs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "lagrel/error.hpp"

namespace lagrel {

namespace {

Vector negate(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Vector add(const Vector& a, const Vector& b, int sign = 1) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i];
    if (sign > 0) out[i] += b[i];
    else out[i] -= b[i];
  }
  return out;
}

bool matrix_less(const Matrix& a, const Matrix& b) { return compare(a, b) < 0; }

bool orthogonal(const BilinearForm& form, const Vector& a, const Vector& b) {
  return sgn(form.pair(a, b)) == 0;
}

std::vector<Vector> unique_reps(const std::vector<Vector>& roots) {
  std::set<Vector> reps;
  for (const auto& r : roots) reps.insert(pair_representative(r));
  return {reps.begin(), reps.end()};
}

// Bron-Kerbosch with pivoting on the orthogonality graph of `nodes`.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
                     std::vector<std::size_t> p, std::vector<std::size_t> x,
                     std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  const auto candidates = p;
  for (auto v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> np, nx;
    for (auto u : p)
      if (adj[v][u]) np.push_back(u);
    for (auto u : x)
      if (adj[v][u]) nx.push_back(u);
    r.push_back(v);
    maximal_cliques(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

IsoSet make_isoset(std::vector<Vector> reps) {
  std::sort(reps.begin(), reps.end());
  return IsoSet{std::move(reps)};
}

void require_root(const RootSystem& rs, const Vector& v, const char* what) {
  if (v.size() != rs.n() || !rs.contains(v))
    throw PreconditionError(std::string(what) + ": vector is not a root");
}

bool trivial_on_subquotient(const BilinearForm& form, const Matrix& w, const Subspace& v1) {
  const Subspace v0 = orth_complement(form, v1);
  for (std::size_t i = 0; i < v0.dim(); ++i) {
    Vector v = v0.basis_vector(i);
    if (!v1.contains(add(w * v, v, -1))) return false;
  }
  return true;
}

}  // namespace

Vector pair_representative(const Vector& v) {
  for (const auto& c : v) {
    if (sgn(c) > 0) return v;
    if (sgn(c) < 0) return negate(v);
  }
  throw PreconditionError("pair_representative of the zero vector");
}

RootSystem::RootSystem(FormPtr form, std::vector<Vector> roots)
    : form_(std::move(form)), roots_(std::move(roots)) {
  if (!form_) throw PreconditionError("RootSystem without a form");
  for (const auto& r : roots_) {
    require_dims(r.size(), form_->dim(), "RootSystem");
    if (is_zero(r)) throw PreconditionError("RootSystem: zero root");
  }
  sorted_ = roots_;
  std::sort(sorted_.begin(), sorted_.end());
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
    throw PreconditionError("RootSystem: duplicate root");
}

bool RootSystem::contains(const Vector& v) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), v);
}

std::vector<Vector> RootSystem::isotropic_roots() const {
  std::vector<Vector> out;
  for (const auto& r : roots_)
    if (is_isotropic(r)) out.push_back(r);
  return out;
}

std::vector<Vector> RootSystem::anisotropic_roots() const {
  std::vector<Vector> out;
  for (const auto& r : roots_)
    if (!is_isotropic(r)) out.push_back(r);
  return out;
}

std::vector<Vector> RootSystem::isotropic_pairs() const { return unique_reps(isotropic_roots()); }
std::vector<Vector> RootSystem::anisotropic_pairs() const { return unique_reps(anisotropic_roots()); }

bool RootSystem::same_roots(const RootSystem& other) const {
  return same_form(form_, other.form_) && sorted_ == other.sorted_;
}

std::vector<Diagnostic> validate(const RootSystem& rs) {
  std::vector<Diagnostic> out;
  const auto& roots = rs.roots();
  const BilinearForm& form = rs.form();
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (!rs.contains(negate(roots[i]))) out.push_back({1, i, i, "negative is not a root"});
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Vector& a = roots[i];
    const Rational q = form.norm(a);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Vector& b = roots[j];
      const Rational ab = form.pair(a, b);
      if (sgn(q) != 0) {
        const Rational k = 2 * ab / q;
        if (k.get_den() != 1) {
          out.push_back({2, i, j, "k = " + format_rational(k) + " is not an integer"});
          continue;
        }
        Vector s = b;
        for (std::size_t c = 0; c < s.size(); ++c) s[c] -= k * a[c];
        if (!rs.contains(s)) out.push_back({2, i, j, "reflection of root j in root i is not a root"});
      } else if (sgn(ab) != 0) {
        if (!rs.contains(add(b, a)) && !rs.contains(add(b, a, -1)))
          out.push_back({3, i, j, "neither root j + root i nor root j - root i is a root"});
      }
    }
  }
  return out;
}

std::vector<Isometry> weyl_group(const RootSystem& rs, std::size_t bound) {
  std::vector<Matrix> gens;
  for (const auto& a : rs.anisotropic_pairs()) gens.push_back(reflection(rs.form(), a));
  std::set<Matrix, decltype(&matrix_less)> seen(&matrix_less);
  std::deque<Matrix> queue{Matrix::identity(rs.n())};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Matrix cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix next = g * cur;
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw BoundExceeded("weyl_group: more than " + std::to_string(bound) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Isometry> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.emplace_back(m, rs.form_ptr());
  return out;
}

std::vector<std::vector<std::size_t>> indecomposable_components(const RootSystem& rs) {
  const auto& roots = rs.roots();
  std::vector<std::size_t> parent(roots.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Vector neg = negate(roots[i]);
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (roots[j] == neg || !orthogonal(rs.form(), roots[i], roots[j])) join(i, j);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < roots.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool IsoSet::contains(const Vector& v) const {
  if (is_zero(v)) return false;
  return std::binary_search(reps.begin(), reps.end(), pair_representative(v));
}

IsoSet transform(const Isometry& w, const IsoSet& s) {
  std::vector<Vector> reps;
  for (const auto& r : s.reps) reps.push_back(pair_representative(w(r)));
  return make_isoset(std::move(reps));
}

std::vector<IsoSet> all_isosets(const RootSystem& rs) {
  const auto pairs = rs.isotropic_pairs();
  std::vector<IsoSet> out;
  std::vector<Vector> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    out.push_back(make_isoset(cur));
    for (std::size_t i = start; i < pairs.size(); ++i) {
      bool ok = true;
      for (const auto& c : cur)
        if (!orthogonal(rs.form(), c, pairs[i])) ok = false;
      if (!ok) continue;
      cur.push_back(pairs[i]);
      grow(i + 1);
      cur.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), [](const IsoSet& a, const IsoSet& b) { return a.reps < b.reps; });
  return out;
}

std::vector<IsoSet> maximal_isosets(const RootSystem& rs, const std::optional<Vector>& v) {
  if (v) require_dims(v->size(), rs.n(), "maximal_isosets");
  std::vector<Vector> nodes;
  for (const auto& p : rs.isotropic_pairs())
    if (!v || orthogonal(rs.form(), p, *v)) nodes.push_back(p);
  std::vector<std::vector<bool>> adj(nodes.size(), std::vector<bool>(nodes.size(), false));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      adj[i][j] = i != j && orthogonal(rs.form(), nodes[i], nodes[j]);
  std::vector<std::size_t> all(nodes.size()), r;
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::size_t>> cliques;
  maximal_cliques(adj, r, all, {}, cliques);
  std::vector<IsoSet> out;
  for (const auto& c : cliques) {
    std::vector<Vector> reps;
    for (auto i : c) reps.push_back(nodes[i]);
    out.push_back(make_isoset(std::move(reps)));
  }
  std::sort(out.begin(), out.end(), [](const IsoSet& a, const IsoSet& b) { return a.reps < b.reps; });
  return out;
}

namespace {

// Anisotropic roots not orthogonal to beta and beta', from a shortest chain
// of isotropic roots joining them, then from a direct scan.
std::vector<Vector> bridging_roots(const RootSystem& rs, const Vector& beta, const Vector& beta_prime) {
  const BilinearForm& form = rs.form();
  std::vector<Vector> out;
  auto bridges = [&](const Vector& d) {
    return rs.contains(d) && !rs.is_isotropic(d) && !orthogonal(form, d, beta) &&
           !orthogonal(form, d, beta_prime);
  };

  const auto iso = rs.isotropic_roots();
  auto index_of = [&](const Vector& v) {
    return static_cast<std::size_t>(std::find(iso.begin(), iso.end(), v) - iso.begin());
  };
  const std::size_t src = index_of(beta), dst = index_of(beta_prime);
  if (src < iso.size() && dst < iso.size()) {
    std::vector<std::size_t> prev(iso.size(), iso.size());
    std::vector<bool> visited(iso.size(), false);
    std::deque<std::size_t> queue{src};
    visited[src] = true;
    while (!queue.empty() && !visited[dst]) {
      auto cur = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < iso.size(); ++j)
        if (!visited[j] && !orthogonal(form, iso[cur], iso[j])) {
          visited[j] = true;
          prev[j] = cur;
          queue.push_back(j);
        }
    }
    if (visited[dst]) {
      std::vector<Vector> chain;
      for (std::size_t at = dst; at != src; at = prev[at]) chain.push_back(iso[at]);
      chain.push_back(iso[src]);
      std::reverse(chain.begin(), chain.end());
      // Partial sums, flipping the sign of each link as needed to stay in the root set.
      std::vector<Vector> sums{chain.front()};
      bool ok = true;
      for (std::size_t i = 1; i < chain.size() && ok; ++i) {
        Vector plus = add(sums.back(), chain[i]), minus = add(sums.back(), chain[i], -1);
        if (rs.contains(plus)) sums.push_back(plus);
        else if (rs.contains(minus)) sums.push_back(minus);
        else ok = false;
      }
      if (ok)
        for (auto it = sums.rbegin(); it != sums.rend(); ++it)
          if (bridges(*it)) out.push_back(*it);
    }
  }
  for (const auto& d : rs.anisotropic_roots())
    if (bridges(d) && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  return out;
}

}  // namespace

Isometry two_step_witness(const RootSystem& rs, const Vector& beta, const Vector& beta_prime) {
  require_root(rs, beta, "two_step_witness");
  require_root(rs, beta_prime, "two_step_witness");
  if (!rs.is_isotropic(beta) || !rs.is_isotropic(beta_prime))
    throw PreconditionError("two_step_witness: roots must be isotropic");
  const BilinearForm& form = rs.form();
  const Vector neg_prime = negate(beta_prime);
  auto hits = [&](const Matrix& w) {
    Vector img = w * beta;
    return img == beta_prime || img == neg_prime;
  };
  if (beta == beta_prime || beta == neg_prime) return Isometry(Matrix::identity(rs.n()), rs.form_ptr());

  if (!orthogonal(form, beta, beta_prime)) {
    for (int sign : {-1, 1}) {
      Vector gamma = add(beta, beta_prime, sign);
      if (!rs.contains(gamma)) continue;
      Matrix w = reflection(form, gamma);
      if (hits(w)) return Isometry(std::move(w), rs.form_ptr());
    }
    throw InvariantViolation("two_step_witness: no reflection joins the non-orthogonal pair");
  }

  const Subspace v1 = Subspace::span(rs.n(), {beta, beta_prime});
  for (const auto& delta : bridging_roots(rs, beta, beta_prime)) {
    const Vector beta1 = reflection(form, delta) * beta;
    for (int s1 : {1, -1}) {
      const Vector b1 = s1 > 0 ? beta1 : negate(beta1);
      const Vector gamma = add(beta, b1, -1);
      if (!rs.contains(gamma) || rs.is_isotropic(gamma)) continue;
      for (int s2 : {1, -1}) {
        const Vector bp = s2 > 0 ? beta_prime : neg_prime;
        const Vector gamma_prime = add(bp, b1, -1);
        if (!rs.contains(gamma_prime) || rs.is_isotropic(gamma_prime)) continue;
        Matrix w = reflection(form, gamma_prime) * reflection(form, gamma);
        if (!hits(w)) continue;
        if (!(w * w == Matrix::identity(rs.n()))) continue;
        if (!trivial_on_subquotient(form, w, v1)) continue;
        return Isometry(std::move(w), rs.form_ptr());
      }
    }
  }
  throw InvariantViolation("two_step_witness: no witness found (is the root system indecomposable?)");
}

Isometry transport_isoset(const RootSystem& rs, const Vector& v, const IsoSet& s, const IsoSet& s_prime) {
  const auto admissible = maximal_isosets(rs, v);
  auto listed = [&](const IsoSet& x) {
    return std::find(admissible.begin(), admissible.end(), x) != admissible.end();
  };
  if (!listed(s) || !listed(s_prime))
    throw PreconditionError("transport_isoset: iso-sets must be maximal and orthogonal to v");
  const BilinearForm& form = rs.form();
  Matrix w = Matrix::identity(rs.n());
  IsoSet cur = s;
  for (std::size_t step = 0; step <= s.pairs() + 1 && !(cur == s_prime); ++step) {
    const Vector* alpha = nullptr;
    for (const auto& a : s_prime.reps)
      if (!cur.contains(a)) {
        alpha = &a;
        break;
      }
    bool moved = false;
    for (const auto& b : cur.reps) {
      if (orthogonal(form, *alpha, b)) continue;
      for (int sign : {1, -1}) {
        Vector gamma = add(*alpha, b, -sign);  // alpha - (sign * b)
        if (!rs.contains(gamma)) continue;
        Matrix sg = reflection(form, gamma);
        w = sg * w;
        cur = transform(Isometry(sg, rs.form_ptr()), cur);
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) throw InvariantViolation("transport_isoset: no connecting reflection");
  }
  Isometry out(std::move(w), rs.form_ptr());
  if (!(transform(out, s) == s_prime) || !(out(v) == v))
    throw InvariantViolation("transport_isoset: witness failed verification");
  return out;
}

std::vector<LinearRelation> relation_generators(const RootSystem& rs) {
  std::vector<LinearRelation> out;
  for (const auto& a : rs.anisotropic_pairs())
    out.push_back(LinearRelation::graph(rs.form_ptr(), reflection(rs.form(), a)));
  for (const auto& a : rs.isotropic_pairs()) {
    Subspace perp = orth_complement(rs.form(), Subspace::span(rs.n(), {a}));
    out.push_back(idempotent_for(rs.form_ptr(), perp));
  }
  return out;
}

std::vector<LinearRelation> isoset_components(const RootSystem& rs) {
  const auto group = weyl_group(rs);
  std::map<Subspace, LinearRelation> found;
  for (const auto& s : all_isosets(rs)) {
    const Subspace perp = orth_complement(rs.form(), s.span(rs.n()));
    const LinearRelation e = idempotent_for(rs.form_ptr(), perp);
    for (const auto& w : group) {
      LinearRelation l = compose(e, LinearRelation::graph(rs.form_ptr(), w.matrix()));
      found.emplace(l.space(), std::move(l));
    }
  }
  std::vector<LinearRelation> out;
  for (auto& [key, l] : found) out.push_back(std::move(l));
  return out;
}

LagrangianEquivalenceRelation build_relation(const RootSystem& rs, const ClosureConfig& cfg) {
  auto r = closure(rs.form_ptr(), relation_generators(rs), cfg);
  const auto expected = isoset_components(rs);
  bool same = expected.size() == r.size();
  for (std::size_t i = 0; same && i < expected.size(); ++i)
    same = expected[i].space() == r.components()[i].space();
  if (!same)
    throw InvariantViolation("build_relation: components differ from {Gamma_w o E_{S^perp}} (" +
                             std::to_string(r.size()) + " vs " + std::to_string(expected.size()) + ")");
  return r;
}

std::optional<ClassWitness> class_membership(const RootSystem& rs, const Vector& v,
                                             const Vector& v_prime) {
  require_dims(v.size(), rs.n(), "class_membership");
  require_dims(v_prime.size(), rs.n(), "class_membership");
  const IsoSet s = maximal_isosets(rs, v).front();
  const Subspace span = s.span(rs.n());
  Matrix reps = Matrix::from_rows(rs.n(), s.reps);
  for (const auto& w : weyl_group(rs)) {
    Vector diff = add(w.inverse()(v_prime), v, -1);
    if (!span.contains(diff)) continue;
    auto coeffs = solve_left(reps, diff);
    if (!coeffs) throw InvariantViolation("class_membership: span coordinates not found");
    return ClassWitness{w, s, std::move(*coeffs)};
  }
  return std::nullopt;
}

RootSystem reduce_by_root(const RootSystem& rs, const Vector& alpha) {
  require_root(rs, alpha, "reduce_by_root");
  if (!rs.is_isotropic(alpha)) throw PreconditionError("reduce_by_root: root is not isotropic");
  const Subspace v0 = orth_complement(rs.form(), Subspace::span(rs.n(), {alpha}));
  const QuotientSpace q = quotient(rs.form(), v0);
  std::vector<Vector> images;
  std::set<Vector> seen;
  for (const auto& b : rs.roots()) {
    if (!orthogonal(rs.form(), b, alpha)) continue;
    Vector p = q.project(b);
    if (is_zero(p) || !seen.insert(p).second) continue;
    images.push_back(std::move(p));
  }
  return RootSystem(make_form(q.induced_form), std::move(images));
}

RootSystem catalog(const std::string& name, const std::vector<int>& params) {
  if (params.size() != 2 || params[0] < 0 || params[1] < 0)
    throw PreconditionError("catalog: expected two non-negative parameters");
  std::size_t m = 0, n = 0;
  bool odd = false;
  if (name == "gl") {
    m = static_cast<std::size_t>(params[0]);
    n = static_cast<std::size_t>(params[1]);
  } else if (name == "osp") {
    if (params[1] % 2 != 0) throw PreconditionError("catalog: osp(M|N) needs even N");
    m = static_cast<std::size_t>(params[0] / 2);
    odd = params[0] % 2 == 1;
    n = static_cast<std::size_t>(params[1] / 2);
  } else {
    throw PreconditionError("catalog: unknown family '" + name + "'");
  }
  const std::size_t dim = m + n;
  if (dim == 0) throw PreconditionError("catalog: zero-dimensional root system");

  std::vector<Rational> diag(dim, 1);
  for (std::size_t p = 0; p < n; ++p) diag[m + p] = -1;
  auto form = make_form(BilinearForm::diagonal(diag));
  auto e = [&](std::size_t i) {
    Vector v(dim);
    v[i] = 1;
    return v;
  };
  auto comb = [&](std::size_t i, int a, std::size_t j, int b) {
    Vector v(dim);
    v[i] += a;
    v[j] += b;
    return v;
  };
  std::vector<Vector> roots;
  if (name == "gl") {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) roots.push_back(comb(i, 1, j, -1));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) roots.push_back(comb(m + p, 1, m + q, -1));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t p = 0; p < n; ++p) {
        roots.push_back(comb(i, 1, m + p, -1));
        roots.push_back(comb(i, -1, m + p, 1));
      }
    return RootSystem(form, std::move(roots));
  }
  auto plus_minus_pairs = [&](std::size_t lo, std::size_t hi, std::size_t lo2, std::size_t hi2,
                              bool distinct_ordered) {
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo2; j < hi2; ++j) {
        if (distinct_ordered && j <= i) continue;
        for (int a : {1, -1})
          for (int b : {1, -1}) roots.push_back(comb(i, a, j, b));
      }
  };
  plus_minus_pairs(0, m, 0, m, true);          // +-e_i +- e_j
  plus_minus_pairs(m, dim, m, dim, true);      // +-d_p +- d_q
  for (std::size_t p = m; p < dim; ++p) {      // +-2 d_p
    roots.push_back(comb(p, 2, p, 0));
    roots.push_back(comb(p, -2, p, 0));
  }
  plus_minus_pairs(0, m, m, dim, false);       // +-e_i +- d_p
  if (odd) {
    for (std::size_t i = 0; i < dim; ++i) {    // +-e_i and +-d_p
      roots.push_back(e(i));
      roots.push_back(negate(e(i)));
    }
  }
  return RootSystem(form, std::move(roots));
}

}  // namespace lagrel
