#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagrel/linear_relation.hpp"

namespace lagrel {

struct ClosureConfig {
  std::size_t max_components = 100000;
  std::size_t max_rounds = 100000;
};

/// A Lagrangian equivalence relation R: a finite set of lagrangian
/// components containing the diagonal, closed under composition and inverse.
/// Components are kept sorted by their canonical subspace.
class LagrangianEquivalenceRelation {
 public:
  LagrangianEquivalenceRelation() = default;
  /// Builds from an already closed component set (deduplicated and sorted
  /// here). Throws NotLagrangian for non-lagrangian components; closure is
  /// not re-checked, see is_closed().
  LagrangianEquivalenceRelation(FormPtr form, std::vector<LinearRelation> components);

  const FormPtr& form_ptr() const { return form_; }
  const BilinearForm& form() const { return *form_; }
  std::size_t n() const { return form_->dim(); }
  const std::vector<LinearRelation>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  /// Index of a component equal to l, if any.
  std::optional<std::size_t> find(const LinearRelation& l) const;
  bool has_component(const LinearRelation& l) const { return find(l).has_value(); }

  friend bool operator==(const LagrangianEquivalenceRelation& a,
                         const LagrangianEquivalenceRelation& b);

 private:
  FormPtr form_;
  std::vector<LinearRelation> components_;
};

/// Smallest closed component set containing the generators. Throws
/// NotLagrangian or BoundExceeded.
LagrangianEquivalenceRelation closure(const FormPtr& form,
                                      const std::vector<LinearRelation>& generators,
                                      const ClosureConfig& cfg = {});
/// Same result, single threaded.
LagrangianEquivalenceRelation closure_ref(const FormPtr& form,
                                          const std::vector<LinearRelation>& generators,
                                          const ClosureConfig& cfg = {});

/// Exhaustive check: contains the diagonal, closed under inverse and under
/// pairwise composition.
bool is_closed(const LagrangianEquivalenceRelation& r);

/// Components of atypicality 0 as isometries. Group axioms are asserted.
std::vector<Isometry> weyl_group(const LagrangianEquivalenceRelation& r);

/// Distinct p1 of all components, sorted.
std::vector<Subspace> special_coisotropics(const LagrangianEquivalenceRelation& r);
/// Distinct p1 of components with positive atypicality, sorted.
std::vector<Subspace> discriminant(const LagrangianEquivalenceRelation& r);
/// Members of the discriminant list not contained in another member; their
/// union is the whole discriminant set.
std::vector<Subspace> maximal_discriminant(const LagrangianEquivalenceRelation& r);

bool is_special_coisotropic(const LagrangianEquivalenceRelation& r, const Subspace& v0);

/// Reduction of R to V0 / V0^perp in the coordinates of quotient(form, V0).
/// Throws PreconditionError unless V0 is special coisotropic.
LagrangianEquivalenceRelation reduce(const LagrangianEquivalenceRelation& r, const Subspace& v0);

bool membership(const LagrangianEquivalenceRelation& r, const Vector& x, const Vector& y);

struct RegularityResult {
  bool holds = false;
  std::optional<Subspace> witness;  // codim-1 special coisotropic V0
  std::string diagnostic;
};

RegularityResult is_one_regular(const LagrangianEquivalenceRelation& r);

/// Weyl group of reduce(R, V0), computed directly and as the stabilizer of V0
/// in W modulo the elements acting trivially on V0/V1; the two are compared.
struct ReducedWeylGroup {
  std::vector<Matrix> direct;      // sorted
  std::vector<Matrix> stabilizer;  // sorted
  bool agree = false;
};

ReducedWeylGroup reduced_weyl_group(const LagrangianEquivalenceRelation& r, const Subspace& v0);

struct SemiregularityResult {
  bool holds = false;
  std::vector<Subspace> decomposition;  // factors found for 1-semiregularity
  std::string diagnostic;
};

/// 1-semiregularity. Without a supplied decomposition, a candidate is
/// discovered from the supports span{v - w : (v, w) in L} and verified.
SemiregularityResult is_one_semiregular(
    const LagrangianEquivalenceRelation& r,
    const std::optional<std::vector<Subspace>>& decomposition = std::nullopt);

/// Checks 1-semiregularity of the reduction at every special coisotropic V0.
SemiregularityResult is_semiregular(const LagrangianEquivalenceRelation& r);

/// The relation induced on a form-nondegenerate subspace U of V from the
/// components' intersections with U x U, in the coordinates of U's basis.
/// Returns nullopt if some component does not split off a lagrangian piece
/// on U.
std::optional<LagrangianEquivalenceRelation> restrict_to_factor(
    const LagrangianEquivalenceRelation& r, const Subspace& u);

/// Relation on V x V' with components L (+) L'.
LagrangianEquivalenceRelation product(const LagrangianEquivalenceRelation& r,
                                      const LagrangianEquivalenceRelation& r_prime);

/// The relation {Delta_V}.
LagrangianEquivalenceRelation trivial_relation(const FormPtr& form);

/// Histogram atypicality -> number of components.
std::map<std::size_t, std::size_t> atypicality_histogram(const LagrangianEquivalenceRelation& r);

}  // namespace lagrel
