#include <doctest.h>

#include "lagrel/kernels.hpp"
#include "lagrel/random.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("eliminate_column matches its serial twin") {
  Rng rng(61);
  // Sizes on both sides of the parallel threshold.
  for (const std::size_t rows : {4u, 40u, 120u}) {
    const std::size_t cols = rows + 3;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
    const std::size_t pivot = rows / 2, col = 1;
    m(pivot, col) = 1;
    for (std::size_t j = 0; j < col; ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = 0;
    Matrix a = m, b = m;
    kernels::eliminate_column(a, pivot, col);
    kernels::eliminate_column_ref(b, pivot, col);
    CHECK(a == b);
    for (std::size_t i = 0; i < rows; ++i) CHECK(a(i, col) == (i == pivot ? 1 : 0));
  }
}

TEST_CASE("expand_frontier matches its serial twin") {
  Rng rng(67);
  for (std::size_t n : {2u, 4u}) {
    const auto space = random_space(rng, n);
    std::vector<LinearRelation> frontier, gens;
    for (int i = 0; i < 6; ++i) frontier.push_back(random_lagrangian(rng, space));
    for (int i = 0; i < 3; ++i) gens.push_back(random_lagrangian(rng, space));
    const auto a = kernels::expand_frontier(frontier, gens);
    const auto b = kernels::expand_frontier_ref(frontier, gens);
    REQUIRE(a.size() == frontier.size() * gens.size());
    CHECK(a == b);
    CHECK(a[1] == compose(frontier[0], gens[1]));
  }
}

TEST_CASE("constraint_blocks matches its serial twin") {
  const auto r = build_relation(gl(2, 2));
  for (std::uint32_t d = 0; d <= 4; ++d) {
    const auto a = kernels::constraint_blocks(r.components(), d);
    const auto b = kernels::constraint_blocks_ref(r.components(), d);
    CHECK(a == b);
  }
}

TEST_CASE("closure and invariant spaces are schedule independent") {
  const auto rs = gl(3, 1);
  const auto gens = relation_generators(rs);
  const auto r = closure(rs.form_ptr(), gens);
  CHECK(r == closure_ref(rs.form_ptr(), gens));
  for (std::uint32_t d = 1; d <= 3; ++d) CHECK(invariant_space(r, d).space == invariant_space_ref(r, d).space);
}
