#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lagrel/polynomial.hpp"
#include "lagrel/relation_monoid.hpp"

namespace lagrel {

/// One graded slice of an invariant ring: a subspace of the coefficient space
/// of degree-d polynomials in num_vars variables.
struct GradedPiece {
  std::size_t num_vars = 0;
  std::uint32_t degree = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  /// Basis polynomials, one per row of the canonical coefficient basis.
  std::vector<Polynomial> basis() const;
  bool contains(const Polynomial& p) const;
};

/// Homogeneous degree-d polynomials f with f o p1 = f o p2 on every component.
GradedPiece invariant_space(const LagrangianEquivalenceRelation& r, std::uint32_t degree);
/// Single-threaded twin of invariant_space.
GradedPiece invariant_space_ref(const LagrangianEquivalenceRelation& r, std::uint32_t degree);
/// Same, for an explicit list of lagrangian (or any) relations on V.
GradedPiece invariant_space(std::size_t n, const std::vector<LinearRelation>& relations,
                            std::uint32_t degree);

/// Degree-d invariants of a finite group, by the constraints f o s = f.
GradedPiece weyl_invariant_space(const std::vector<Isometry>& group, std::uint32_t degree);
/// Span of Reynolds averages of all monomials (independent route).
GradedPiece reynolds_invariant_space(const std::vector<Isometry>& group, std::uint32_t degree);

struct DiscriminantPolynomial {
  Polynomial t;
  std::uint32_t degree = 0;
  std::vector<Subspace> hyperplanes;  // the W-orbit of V0
  bool squared = false;  // product of linear forms was only W-semi-invariant
};

/// Product of the linear forms cutting the W-orbit of the 1-regularity
/// witness, leading coefficient 1. Throws PreconditionError if R is not
/// 1-regular with a codimension-1 witness.
DiscriminantPolynomial discriminant_polynomial(const LagrangianEquivalenceRelation& r);

struct RestrictionMap {
  Matrix matrix;  // rows: target basis, cols: source basis
  std::size_t rank = 0;
  GradedPiece source;
  GradedPiece target;
};

/// Restrict-to-V0-then-descend from Inv_d(R) to Inv_d(reduce(R, V0)).
RestrictionMap restriction_map(const LagrangianEquivalenceRelation& r, const Subspace& v0,
                               std::uint32_t degree);

struct SeparationCertificate {
  Polynomial invariant;
  std::uint32_t degree = 0;
  Rational value_x;
  Rational value_y;
};

struct SeparationResult {
  bool equivalent = false;
  std::optional<SeparationCertificate> certificate;
  /// Set when (x, y) lies outside R but no separator of degree <= dmax exists.
  bool exhausted = false;
};

/// Searches degrees 1..dmax for an invariant separating x and y. For pairs in
/// R, asserts every basis invariant agrees (InvariantViolation otherwise).
SeparationResult separate(const LagrangianEquivalenceRelation& r, const Vector& x, const Vector& y,
                          std::uint32_t dmax);
/// Invariant pieces of degrees 1..dmax, for repeated separation queries.
std::vector<GradedPiece> invariant_pieces(const LagrangianEquivalenceRelation& r, std::uint32_t dmax);
/// Same search over precomputed pieces (pieces[i] has degree i + 1).
SeparationResult separate(const LagrangianEquivalenceRelation& r,
                          const std::vector<GradedPiece>& pieces, const Vector& x, const Vector& y);

struct ProductCheck {
  std::size_t direct = 0;       // dim Inv_d(R x R')
  std::size_t convolution = 0;  // sum_{a+b=d} dim Inv_a(R) dim Inv_b(R')
  bool holds() const { return direct == convolution; }
};

ProductCheck product_invariant_check(const LagrangianEquivalenceRelation& r,
                                     const LagrangianEquivalenceRelation& r_prime,
                                     std::uint32_t degree);

/// Points x_1..x_k with (f_i(x_j)) invertible for a linearly independent
/// family; nullopt if the randomized search gives up (only for dependent
/// families, with overwhelming probability).
std::optional<std::vector<Vector>> independent_points(const std::vector<Polynomial>& family,
                                                      std::mt19937_64& rng,
                                                      std::size_t attempts_per_point = 64);

}  // namespace lagrel
