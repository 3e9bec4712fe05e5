#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagrel/relation_monoid.hpp"

namespace lagrel {

/// Finite set of nonzero roots in (V, <.|.>). Roots keep their input order;
/// comparisons use sorted copies.
class RootSystem {
 public:
  RootSystem() = default;
  /// Throws PreconditionError for zero, duplicate or wrongly sized roots.
  RootSystem(FormPtr form, std::vector<Vector> roots);

  const FormPtr& form_ptr() const { return form_; }
  const BilinearForm& form() const { return *form_; }
  std::size_t n() const { return form_->dim(); }
  const std::vector<Vector>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  bool contains(const Vector& v) const;
  bool is_isotropic(const Vector& v) const { return sgn(form_->norm(v)) == 0; }
  std::vector<Vector> isotropic_roots() const;
  std::vector<Vector> anisotropic_roots() const;
  /// One representative per +- pair (first nonzero coordinate positive).
  std::vector<Vector> isotropic_pairs() const;
  std::vector<Vector> anisotropic_pairs() const;

  /// Same root set up to order.
  bool same_roots(const RootSystem& other) const;

 private:
  FormPtr form_;
  std::vector<Vector> roots_;
  std::vector<Vector> sorted_;
};

/// Representative of {v, -v} with first nonzero coordinate positive.
Vector pair_representative(const Vector& v);

struct Diagnostic {
  int axiom = 0;  // 1: symmetry, 2: anisotropic integrality/reflection, 3: isotropic shift
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;
};

/// Exhaustive check of the three WGRS axioms; empty result means valid.
std::vector<Diagnostic> validate(const RootSystem& rs);

/// Group generated by the reflections in anisotropic roots, sorted by matrix.
/// Throws BoundExceeded past `bound` elements.
std::vector<Isometry> weyl_group(const RootSystem& rs, std::size_t bound = 100000);

/// Connected components of the non-orthogonality graph on the roots, with
/// each root joined to its negative. Lists root indices.
std::vector<std::vector<std::size_t>> indecomposable_components(const RootSystem& rs);

/// Symmetric set of pairwise orthogonal isotropic roots, stored as sorted
/// pair representatives.
struct IsoSet {
  std::vector<Vector> reps;

  std::size_t pairs() const { return reps.size(); }
  bool contains(const Vector& v) const;
  Subspace span(std::size_t n) const { return Subspace::span(n, reps); }
  friend bool operator==(const IsoSet&, const IsoSet&) = default;
};

/// Image of an iso-set under an isometry.
IsoSet transform(const Isometry& w, const IsoSet& s);

/// Every iso-set (all orthogonal cliques of isotropic pairs, including the
/// empty one).
std::vector<IsoSet> all_isosets(const RootSystem& rs);
/// Inclusion-maximal iso-sets, optionally restricted to roots orthogonal to v.
std::vector<IsoSet> maximal_isosets(const RootSystem& rs, const std::optional<Vector>& v = std::nullopt);

/// w in W with w(beta) = +-beta'. Throws PreconditionError for non-isotropic
/// or unknown roots, InvariantViolation if no witness is found.
Isometry two_step_witness(const RootSystem& rs, const Vector& beta, const Vector& beta_prime);

/// w in Stab_W(v) with w(S) = S'. Throws PreconditionError unless S and S'
/// are maximal iso-sets orthogonal to v.
Isometry transport_isoset(const RootSystem& rs, const Vector& v, const IsoSet& s,
                          const IsoSet& s_prime);

/// Closure of {Gamma_s : s in W generators} and {E_{alpha^perp} : alpha
/// isotropic}. Asserts the component set equals {Gamma_w o E_{S^perp}}.
LagrangianEquivalenceRelation build_relation(const RootSystem& rs, const ClosureConfig& cfg = {});
/// Generators used by build_relation.
std::vector<LinearRelation> relation_generators(const RootSystem& rs);
/// {Gamma_w o E_{S^perp} : w in W, S iso-set}, deduplicated and sorted.
std::vector<LinearRelation> isoset_components(const RootSystem& rs);

struct ClassWitness {
  Isometry w;
  IsoSet s;
  Vector coefficients;  // w^{-1} v' - v = sum_i c_i s.reps[i]
};

/// (v, v') in R iff v' in W(v + Span S) for one S in A_v^mx.
std::optional<ClassWitness> class_membership(const RootSystem& rs, const Vector& v,
                                             const Vector& v_prime);

/// Root system on alpha^perp / C alpha, in the coordinates of
/// quotient(form, alpha^perp). Throws PreconditionError unless alpha is an
/// isotropic root.
RootSystem reduce_by_root(const RootSystem& rs, const Vector& alpha);

/// "gl" with (m, n) or "osp" with (odd dimension 2m+1 or even 2m, 2n) given as
/// ("osp", {M, N}) meaning osp(M|N). Throws PreconditionError on bad input.
RootSystem catalog(const std::string& name, const std::vector<int>& params);

}  // namespace lagrel
