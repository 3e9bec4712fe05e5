#pragma once

// Data-parallel kernels (OpenMP) and their serial reference twins. Each pair
// must produce bit-identical results; tests/test_kernels.cpp checks this and
// bench/ compares their speed.

#include <cstdint>
#include <span>
#include <vector>

#include "lagrel/linear_relation.hpp"

namespace lagrel::kernels {

/// Clears column `col` in every row except `pivot_row`, whose pivot entry
/// must already be 1. Only columns >= col are touched.
void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col);
void eliminate_column_ref(Matrix& m, std::size_t pivot_row, std::size_t col);

/// All g o x for x in frontier, g in generators, frontier-major order.
std::vector<LinearRelation> expand_frontier(std::span<const LinearRelation> frontier,
                                            std::span<const LinearRelation> generators);
std::vector<LinearRelation> expand_frontier_ref(std::span<const LinearRelation> frontier,
                                                std::span<const LinearRelation> generators);

/// Per relation L with basis [A1 | A2]: the matrix S(A1) - S(A2) whose rows
/// are linear conditions on degree-d coefficient vectors f expressing
/// f(t A1) == f(t A2) identically in t.
std::vector<Matrix> constraint_blocks(std::span<const LinearRelation> relations,
                                      std::uint32_t degree);
std::vector<Matrix> constraint_blocks_ref(std::span<const LinearRelation> relations,
                                          std::uint32_t degree);

/// Below this many entries the parallel kernels fall back to serial loops.
inline constexpr std::size_t kParallelThreshold = 4096;

}  // namespace lagrel::kernels
