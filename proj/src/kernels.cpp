#include "lagrel/kernels.hpp"

#include "lagrel/polynomial.hpp"

namespace lagrel::kernels {

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col) {
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  const std::size_t cols = m.cols();
  const auto pivot = m.row(pivot_row);
#pragma omp parallel for schedule(static) if (m.rows() * (cols - col) > kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    if (static_cast<std::size_t>(i) == pivot_row || sgn(m(i, col)) == 0) continue;
    const Rational f = m(i, col);
    auto r = m.row(i);
    for (std::size_t j = col; j < cols; ++j)
      if (sgn(pivot[j]) != 0) r[j] -= f * pivot[j];
  }
}

std::vector<LinearRelation> expand_frontier(std::span<const LinearRelation> frontier,
                                            std::span<const LinearRelation> generators) {
  const std::size_t g = generators.size();
  const auto total = static_cast<std::ptrdiff_t>(frontier.size() * g);
  std::vector<LinearRelation> out(frontier.size() * g);
#pragma omp parallel for schedule(dynamic) if (total > 1)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = compose(frontier[idx / g], generators[idx % g]);
  }
  return out;
}

std::vector<Matrix> constraint_blocks(std::span<const LinearRelation> relations,
                                      std::uint32_t degree) {
  std::vector<Matrix> out(relations.size());
  if (relations.empty()) return out;
  // Warm the shared monomial tables before fanning out.
  for (std::uint32_t d = 0; d <= degree + 1; ++d) {
    MonomialBasis::get(relations.front().n(), d);
    MonomialBasis::get(relations.front().dim(), d);
  }
  const auto count = static_cast<std::ptrdiff_t>(relations.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto& l = relations[static_cast<std::size_t>(k)];
    const std::size_t n = l.n();
    Matrix a1 = l.space().basis().col_block(0, n);
    Matrix a2 = l.space().basis().col_block(n, n);
    out[static_cast<std::size_t>(k)] = substitution_matrix(a1, degree) - substitution_matrix(a2, degree);
  }
  return out;
}

}  // namespace lagrel::kernels
