#pragma once

// Seeded generators of random test data: forms with isotropic vectors,
// isometries, coisotropic subspaces and lagrangian relations.

#include <random>

#include "lagrel/linear_relation.hpp"

namespace lagrel {

using Rng = std::mt19937_64;

/// Small rational with numerator in [-range, range] and denominator in [1, max_den].
Rational random_rational(Rng& rng, int range = 4, int max_den = 3);
Vector random_vector(Rng& rng, std::size_t n, int range = 4, int max_den = 3);
Matrix random_invertible(Rng& rng, std::size_t n);

/// A nondegenerate form together with mutually orthogonal isotropic vectors.
struct RandomSpace {
  FormPtr form;
  std::vector<Vector> isotropic;  // spans a totally isotropic subspace
};

/// Hyperbolic planes plus a signed diagonal part, conjugated by a random
/// change of basis.
RandomSpace random_space(Rng& rng, std::size_t n);

/// Product of 1..max_reflections reflections in random anisotropic vectors.
Matrix random_isometry(Rng& rng, const BilinearForm& form, std::size_t max_reflections = 3);

/// V0 = S^perp for a random totally isotropic S (possibly S = 0, V0 = V).
Subspace random_coisotropic(Rng& rng, const RandomSpace& space);

/// Gamma_g o E_{V0} o Gamma_h for random g, h and random coisotropic V0.
LinearRelation random_lagrangian(Rng& rng, const RandomSpace& space);

}  // namespace lagrel
