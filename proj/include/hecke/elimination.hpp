#pragma once

// Exact Gauss-Jordan elimination kernels.
//
// `echelonize` is the production kernel: sparse rows, OpenMP over row chunks
// in the forward pass and over rows in back-substitution. `reference::rref`
// is a dense textbook implementation used by tests and the benchmark as the
// ground truth. Both produce the unique reduced row echelon form, so their
// outputs are bit-identical.

#include <cstddef>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/sparse.hpp"

namespace hecke {

struct Echelon {
  // Nonzero rows of the RREF, ordered by strictly increasing pivot column.
  std::vector<SparseVec> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return rows.size(); }
};

// Reduced row echelon form of span(rows) inside a space of dimension `cols`.
// With reduce == false only the forward pass runs: rows are in echelon form
// with unit pivots but entries above pivots are not cleared.
Echelon echelonize(std::vector<SparseVec> rows, std::size_t cols, bool reduce = true);

std::size_t rank_of(std::vector<SparseVec> rows, std::size_t cols);

// Coefficient vectors y with sum_i y_i * rows[i] = 0, as the canonical basis
// of the left kernel (length rows.size()).
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, std::size_t cols);

namespace reference {

struct DenseRref {
  Mat echelon;  // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;
};

// Plain serial Gauss-Jordan: pivot on the first nonzero column, lowest row
// index first.
DenseRref rref(const Mat& m);

}  // namespace reference
}  // namespace hecke
