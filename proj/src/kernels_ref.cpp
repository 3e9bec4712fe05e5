#include "lagrel/kernels.hpp"
#include "lagrel/polynomial.hpp"

namespace lagrel::kernels {

void eliminate_column_ref(Matrix& m, std::size_t pivot_row, std::size_t col) {
  const auto pivot = m.row(pivot_row);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == pivot_row || sgn(m(i, col)) == 0) continue;
    const Rational f = m(i, col);
    auto r = m.row(i);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (sgn(pivot[j]) != 0) r[j] -= f * pivot[j];
  }
}

std::vector<LinearRelation> expand_frontier_ref(std::span<const LinearRelation> frontier,
                                                std::span<const LinearRelation> generators) {
  std::vector<LinearRelation> out;
  out.reserve(frontier.size() * generators.size());
  for (const auto& x : frontier)
    for (const auto& g : generators) out.push_back(compose(x, g));
  return out;
}

std::vector<Matrix> constraint_blocks_ref(std::span<const LinearRelation> relations,
                                          std::uint32_t degree) {
  std::vector<Matrix> out;
  out.reserve(relations.size());
  for (const auto& l : relations) {
    const std::size_t n = l.n();
    out.push_back(substitution_matrix(l.space().basis().col_block(0, n), degree) -
                  substitution_matrix(l.space().basis().col_block(n, n), degree));
  }
  return out;
}

}  // namespace lagrel::kernels
