#include "lagrel/relation_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lagrel/error.hpp"
#include "lagrel/kernels.hpp"

namespace lagrel {

namespace {

bool space_less(const LinearRelation& a, const LinearRelation& b) { return a.space() < b.space(); }

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// U x U inside V x V.
Subspace doubled(const Subspace& u) {
  const std::size_t n = u.ambient_dim();
  Matrix rows(0, 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    rows.append_row(concat(u.basis_vector(i), Vector(n)));
    rows.append_row(concat(Vector(n), u.basis_vector(i)));
  }
  return Subspace(2 * n, rows);
}

Matrix weyl_matrix(const LinearRelation& l) {
  const std::size_t n = l.n();
  // For atypicality 0 the canonical basis is [I | g^T].
  return l.space().basis().col_block(n, n).transpose();
}

bool matrix_less(const Matrix& a, const Matrix& b) { return compare(a, b) < 0; }

bool sorted_contains(const std::vector<Matrix>& sorted, const Matrix& m) {
  return std::binary_search(sorted.begin(), sorted.end(), m, matrix_less);
}

LagrangianEquivalenceRelation closure_impl(const FormPtr& form,
                                           const std::vector<LinearRelation>& generators,
                                           const ClosureConfig& cfg, bool parallel) {
  std::vector<LinearRelation> gens;
  for (const auto& g : generators) {
    if (!same_form(g.form_ptr(), form)) throw DimensionMismatch("closure: generator on another form");
    if (!g.is_lagrangian()) throw NotLagrangian("closure: generator is not Lagrangian");
    gens.push_back(LinearRelation(form, g.space()));
    gens.push_back(inverse(gens.back()));
  }
  std::sort(gens.begin(), gens.end(), space_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::map<Subspace, LinearRelation> seen;
  std::vector<LinearRelation> frontier{LinearRelation::diagonal(form)};
  seen.emplace(frontier.front().space(), frontier.front());
  std::size_t rounds = 0;
  while (!frontier.empty() && !gens.empty()) {
    if (++rounds > cfg.max_rounds)
      throw BoundExceeded("closure: exceeded " + std::to_string(cfg.max_rounds) + " rounds");
    auto products = parallel ? kernels::expand_frontier(frontier, gens)
                             : kernels::expand_frontier_ref(frontier, gens);
    std::vector<LinearRelation> next;
    for (auto& p : products) {
      if (seen.emplace(p.space(), p).second) {
        next.push_back(std::move(p));
        if (seen.size() > cfg.max_components)
          throw BoundExceeded("closure: more than " + std::to_string(cfg.max_components) +
                              " components (the monoid may be infinite)");
      }
    }
    frontier = std::move(next);
  }
  std::vector<LinearRelation> components;
  components.reserve(seen.size());
  for (auto& [key, l] : seen) components.push_back(std::move(l));
  return LagrangianEquivalenceRelation(form, std::move(components));
}

}  // namespace

LagrangianEquivalenceRelation::LagrangianEquivalenceRelation(FormPtr form,
                                                             std::vector<LinearRelation> components)
    : form_(std::move(form)), components_(std::move(components)) {
  for (const auto& l : components_) {
    if (!same_form(l.form_ptr(), form_)) throw DimensionMismatch("component on another form");
    if (!l.is_lagrangian()) throw NotLagrangian("component is not Lagrangian");
  }
  std::sort(components_.begin(), components_.end(), space_less);
  components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
}

std::optional<std::size_t> LagrangianEquivalenceRelation::find(const LinearRelation& l) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), l, space_less);
  if (it == components_.end() || !(it->space() == l.space())) return std::nullopt;
  return static_cast<std::size_t>(it - components_.begin());
}

bool operator==(const LagrangianEquivalenceRelation& a, const LagrangianEquivalenceRelation& b) {
  if (!same_form(a.form_, b.form_) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.components_[i].space() == b.components_[i].space())) return false;
  return true;
}

LagrangianEquivalenceRelation closure(const FormPtr& form,
                                      const std::vector<LinearRelation>& generators,
                                      const ClosureConfig& cfg) {
  return closure_impl(form, generators, cfg, true);
}

LagrangianEquivalenceRelation closure_ref(const FormPtr& form,
                                          const std::vector<LinearRelation>& generators,
                                          const ClosureConfig& cfg) {
  return closure_impl(form, generators, cfg, false);
}

bool is_closed(const LagrangianEquivalenceRelation& r) {
  if (!r.has_component(LinearRelation::diagonal(r.form_ptr()))) return false;
  const auto& comps = r.components();
  for (const auto& l : comps)
    if (!r.has_component(inverse(l))) return false;
  constexpr std::size_t kBlock = 16;
  for (std::size_t start = 0; start < comps.size(); start += kBlock) {
    std::span<const LinearRelation> rows(comps.data() + start, std::min(kBlock, comps.size() - start));
    for (const auto& p : kernels::expand_frontier(rows, comps))
      if (!r.has_component(p)) return false;
  }
  return true;
}

std::vector<Isometry> weyl_group(const LagrangianEquivalenceRelation& r) {
  std::vector<Matrix> mats;
  for (const auto& l : r.components())
    if (atypicality(l) == 0) mats.push_back(weyl_matrix(l));
  std::sort(mats.begin(), mats.end(), matrix_less);

  if (!sorted_contains(mats, Matrix::identity(r.n())))
    throw InvariantViolation("weyl_group: identity missing");
  for (const auto& a : mats) {
    if (!sorted_contains(mats, inverse(a))) throw InvariantViolation("weyl_group: not closed under inverse");
    for (const auto& b : mats)
      if (!sorted_contains(mats, a * b)) throw InvariantViolation("weyl_group: not closed under product");
  }
  std::vector<Isometry> out;
  out.reserve(mats.size());
  for (auto& m : mats) out.emplace_back(std::move(m), r.form_ptr());
  return out;
}

std::vector<Subspace> special_coisotropics(const LagrangianEquivalenceRelation& r) {
  std::set<Subspace> s;
  for (const auto& l : r.components()) s.insert(l.p1());
  return {s.begin(), s.end()};
}

std::vector<Subspace> discriminant(const LagrangianEquivalenceRelation& r) {
  std::set<Subspace> s;
  for (const auto& l : r.components())
    if (atypicality(l) > 0) s.insert(l.p1());
  return {s.begin(), s.end()};
}

std::vector<Subspace> maximal_discriminant(const LagrangianEquivalenceRelation& r) {
  auto d = discriminant(r);
  std::vector<Subspace> out;
  for (const auto& a : d) {
    bool dominated = false;
    for (const auto& b : d)
      if (!(a == b) && b.contains(a)) dominated = true;
    if (!dominated) out.push_back(a);
  }
  return out;
}

bool is_special_coisotropic(const LagrangianEquivalenceRelation& r, const Subspace& v0) {
  for (const auto& l : r.components())
    if (l.p1() == v0) return true;
  return false;
}

LagrangianEquivalenceRelation reduce(const LagrangianEquivalenceRelation& r, const Subspace& v0) {
  require_dims(v0.ambient_dim(), r.n(), "reduce");
  if (!is_special_coisotropic(r, v0)) throw PreconditionError("reduce: V0 is not special coisotropic");
  const QuotientSpace q = quotient(r.form(), v0);
  const FormPtr qform = make_form(q.induced_form);
  const LinearRelation e = idempotent_for(r.form_ptr(), v0);
  const Subspace box = doubled(v0);
  const std::size_t n = r.n(), k = q.dim();

  std::vector<LinearRelation> reduced;
  for (const auto& l : r.components()) {
    const bool inside = box.contains(l.space());
    const bool fixed = compose(compose(e, l), e) == l;
    if (inside != fixed)
      throw InvariantViolation("reduce: the two component filters disagree");
    if (!inside) continue;
    Matrix rows(0, 2 * k);
    for (std::size_t i = 0; i < l.dim(); ++i) {
      Vector row = l.space().basis_vector(i);
      Vector x(row.begin(), row.begin() + n), y(row.begin() + n, row.end());
      rows.append_row(concat(q.project(x), q.project(y)));
    }
    reduced.emplace_back(qform, Subspace(2 * k, rows));
  }
  LagrangianEquivalenceRelation out(qform, std::move(reduced));
  if (!is_closed(out)) throw InvariantViolation("reduce: reduced component set is not closed");
  return out;
}

bool membership(const LagrangianEquivalenceRelation& r, const Vector& x, const Vector& y) {
  require_dims(x.size(), r.n(), "membership");
  require_dims(y.size(), r.n(), "membership");
  for (const auto& l : r.components())
    if (l.contains(x, y)) return true;
  return false;
}

RegularityResult is_one_regular(const LagrangianEquivalenceRelation& r) {
  RegularityResult out;
  auto maximal = maximal_discriminant(r);
  if (maximal.empty()) {
    out.holds = true;
    out.diagnostic = "empty discriminant";
    return out;
  }
  for (const auto& s : maximal)
    if (s.codim() != 1) {
      out.diagnostic = "maximal discriminant subspace of codimension " + std::to_string(s.codim());
      return out;
    }
  const auto w = weyl_group(r);
  std::set<Subspace> orbit;
  for (const auto& s : w) orbit.insert(apply(s.matrix(), maximal.front()));
  if (std::vector<Subspace>(orbit.begin(), orbit.end()) != maximal) {
    out.diagnostic = "discriminant hyperplanes form " + std::to_string(maximal.size()) +
                     " subspaces but the W-orbit of the first has " + std::to_string(orbit.size());
    return out;
  }
  out.holds = true;
  out.witness = maximal.front();
  return out;
}

ReducedWeylGroup reduced_weyl_group(const LagrangianEquivalenceRelation& r, const Subspace& v0) {
  if (!is_one_regular(r).holds) throw PreconditionError("reduced_weyl_group: R is not 1-regular");
  ReducedWeylGroup out;
  for (const auto& s : weyl_group(reduce(r, v0))) out.direct.push_back(s.matrix());

  const QuotientSpace q = quotient(r.form(), v0);
  std::set<Matrix, decltype(&matrix_less)> induced(&matrix_less);
  for (const auto& s : weyl_group(r)) {
    if (!(apply(s.matrix(), v0) == v0)) continue;
    Matrix m(q.dim(), q.dim());
    for (std::size_t j = 0; j < q.dim(); ++j) {
      Vector img = q.project(s(q.lifts.row_vector(j)));
      for (std::size_t i = 0; i < q.dim(); ++i) m(i, j) = img[i];
    }
    induced.insert(std::move(m));
  }
  out.stabilizer.assign(induced.begin(), induced.end());
  out.agree = out.direct == out.stabilizer;
  return out;
}

std::optional<LagrangianEquivalenceRelation> restrict_to_factor(
    const LagrangianEquivalenceRelation& r, const Subspace& u) {
  if (!is_nondegenerate_on(r.form(), u)) return std::nullopt;
  const FormPtr uform = make_form(BilinearForm(restricted_gram(r.form(), u.basis())));
  const Subspace box = doubled(u);
  const std::size_t n = r.n(), d = u.dim();
  std::vector<LinearRelation> pieces;
  for (const auto& l : r.components()) {
    Subspace inter = subspace_intersect(l.space(), box);
    if (inter.dim() != d) return std::nullopt;
    Matrix rows(0, 2 * d);
    for (std::size_t i = 0; i < inter.dim(); ++i) {
      Vector row = inter.basis_vector(i);
      Vector x(row.begin(), row.begin() + n), y(row.begin() + n, row.end());
      rows.append_row(concat(u.coordinates(x), u.coordinates(y)));
    }
    LinearRelation piece(uform, Subspace(2 * d, rows));
    if (!piece.is_lagrangian()) return std::nullopt;
    pieces.push_back(std::move(piece));
  }
  return LagrangianEquivalenceRelation(uform, std::move(pieces));
}

namespace {

std::optional<std::string> verify_decomposition(const LagrangianEquivalenceRelation& r,
                                                const std::vector<Subspace>& factors) {
  const BilinearForm& form = r.form();
  std::size_t total = 0;
  Subspace sum = Subspace::zero(r.n());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].ambient_dim() != r.n()) return "factor of wrong ambient dimension";
    if (!is_nondegenerate_on(form, factors[i])) return "factor " + std::to_string(i) + " is degenerate";
    for (std::size_t j = 0; j < i; ++j)
      if (!restricted_gram(form, factors[i].basis()).empty() &&
          !(factors[i].basis() * form.gram() * factors[j].basis().transpose()).is_zero())
        return "factors " + std::to_string(j) + " and " + std::to_string(i) + " are not orthogonal";
    total += factors[i].dim();
    sum = subspace_sum(sum, factors[i]);
  }
  if (total != r.n() || sum.dim() != r.n()) return "factors do not sum to V";

  std::size_t product_size = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto ri = restrict_to_factor(r, factors[i]);
    if (!ri) return "components do not split along factor " + std::to_string(i);
    auto reg = is_one_regular(*ri);
    if (!reg.holds) return "factor " + std::to_string(i) + " is not 1-regular: " + reg.diagnostic;
    product_size *= ri->size();
  }
  if (product_size != r.size()) return "R is not the product of its factor relations";
  return std::nullopt;
}

std::vector<Subspace> component_supports(const LagrangianEquivalenceRelation& r, bool atoms_only) {
  const std::size_t n = r.n();
  std::set<Subspace> support_set;
  for (const auto& l : r.components()) {
    Matrix diff = l.space().basis().col_block(0, n) - l.space().basis().col_block(n, n);
    Subspace s(n, diff);
    if (s.dim() > 0) support_set.insert(std::move(s));
  }
  std::vector<Subspace> supports(support_set.begin(), support_set.end());
  if (!atoms_only) return supports;
  // Drop supports that are sums of smaller ones, as for products L (+) L'.
  std::vector<Subspace> atoms;
  for (const auto& s : supports) {
    Subspace below = Subspace::zero(n);
    for (const auto& t : supports)
      if (t.dim() < s.dim() && s.contains(t)) below = subspace_sum(below, t);
    if (!(below == s)) atoms.push_back(s);
  }
  return atoms;
}

std::optional<std::vector<Subspace>> discover_decomposition(const LagrangianEquivalenceRelation& r,
                                                            bool atoms_only) {
  const BilinearForm& form = r.form();
  const std::size_t n = r.n();
  const std::vector<Subspace> supports = component_supports(r, atoms_only);

  std::vector<std::size_t> parent(supports.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(supports[i].basis() * form.gram() * supports[j].basis().transpose()).is_zero())
        parent[find(i)] = find(j);

  std::map<std::size_t, Subspace> class_span;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    auto root = find(i);
    auto [it, inserted] = class_span.emplace(root, supports[i]);
    if (!inserted) it->second = subspace_sum(it->second, supports[i]);
  }
  std::vector<Subspace> classes;
  for (auto& [root, span] : class_span) classes.push_back(span);

  // Enlarge degenerate class spans by partners orthogonal to everything else.
  std::vector<Subspace> factors;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Subspace others = Subspace::zero(n);
    for (std::size_t o = 0; o < classes.size(); ++o)
      if (o != c) others = subspace_sum(others, classes[o]);
    for (const auto& f : factors) others = subspace_sum(others, f);
    const Subspace room = orth_complement(form, others);
    if (!room.contains(classes[c])) return std::nullopt;
    Subspace f = classes[c];
    while (!is_nondegenerate_on(form, f)) {
      Subspace rad = subspace_intersect(f, orth_complement(form, f));
      const Vector r0 = rad.basis_vector(0);
      bool grown = false;
      for (std::size_t i = 0; i < room.dim() && !grown; ++i) {
        Vector y = room.basis_vector(i);
        if (sgn(form.pair(r0, y)) != 0 && !f.contains(y)) {
          f = subspace_sum(f, Subspace::span(n, {y}));
          grown = true;
        }
      }
      if (!grown) return std::nullopt;
    }
    factors.push_back(std::move(f));
  }
  Subspace covered = Subspace::zero(n);
  for (const auto& f : factors) covered = subspace_sum(covered, f);
  Subspace rest = orth_complement(form, covered);
  if (rest.dim() > 0) factors.push_back(std::move(rest));
  return factors;
}

}  // namespace

SemiregularityResult is_one_semiregular(const LagrangianEquivalenceRelation& r,
                                        const std::optional<std::vector<Subspace>>& decomposition) {
  SemiregularityResult out;
  std::vector<std::vector<Subspace>> candidates;
  if (decomposition) {
    candidates.push_back(*decomposition);
  } else {
    for (bool atoms_only : {true, false})
      if (auto found = discover_decomposition(r, atoms_only))
        if (std::find(candidates.begin(), candidates.end(), *found) == candidates.end())
          candidates.push_back(std::move(*found));
    candidates.push_back({Subspace::full(r.n())});
  }
  for (const auto& candidate : candidates) {
    auto failure = verify_decomposition(r, candidate);
    if (!failure) {
      out.holds = true;
      out.decomposition = candidate;
      out.diagnostic.clear();
      return out;
    }
    if (!out.diagnostic.empty()) out.diagnostic += "; ";
    out.diagnostic += *failure;
  }
  return out;
}

SemiregularityResult is_semiregular(const LagrangianEquivalenceRelation& r) {
  SemiregularityResult out;
  const auto special = special_coisotropics(r);
  for (std::size_t i = 0; i < special.size(); ++i) {
    auto res = is_one_semiregular(reduce(r, special[i]));
    if (!res.holds) {
      out.diagnostic = "reduction at special coisotropic #" + std::to_string(i) + " (dim " +
                       std::to_string(special[i].dim()) + ") is not 1-semiregular: " + res.diagnostic;
      return out;
    }
  }
  out.holds = true;
  return out;
}

LagrangianEquivalenceRelation product(const LagrangianEquivalenceRelation& r,
                                      const LagrangianEquivalenceRelation& r_prime) {
  const std::size_t n = r.n(), m = r_prime.n();
  const FormPtr form = make_form(direct_sum(r.form(), r_prime.form()));
  auto embed = [&](const Subspace& s, bool second) {
    const std::size_t own = second ? m : n;
    Matrix rows(0, 2 * (n + m));
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vector row = s.basis_vector(i);
      Vector out(2 * (n + m));
      const std::size_t shift = second ? n : 0;
      for (std::size_t j = 0; j < own; ++j) {
        out[shift + j] = row[j];
        out[n + m + shift + j] = row[own + j];
      }
      rows.append_row(out);
    }
    return rows;
  };
  std::vector<LinearRelation> comps;
  for (const auto& a : r.components()) {
    Matrix ea = embed(a.space(), false);
    for (const auto& b : r_prime.components()) {
      Matrix rows = ea;
      rows.append_rows(embed(b.space(), true));
      comps.emplace_back(form, Subspace(2 * (n + m), rows));
    }
  }
  return LagrangianEquivalenceRelation(form, std::move(comps));
}

LagrangianEquivalenceRelation trivial_relation(const FormPtr& form) {
  return LagrangianEquivalenceRelation(form, {LinearRelation::diagonal(form)});
}

std::map<std::size_t, std::size_t> atypicality_histogram(const LagrangianEquivalenceRelation& r) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& l : r.components()) ++h[atypicality(l)];
  return h;
}

}  // namespace lagrel
