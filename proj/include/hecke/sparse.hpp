#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

struct Entry {
  std::size_t col;
  Scalar val;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sorted by column, no explicit zeros.
using SparseVec = std::vector<Entry>;

SparseVec to_sparse(std::span<const Scalar> dense);
std::vector<Scalar> to_dense(const SparseVec& v, std::size_t dim);

// Returns the entry at `col`, or nullptr if it is zero.
const Scalar* find(const SparseVec& v, std::size_t col);

// dst += a * src
void axpy(SparseVec& dst, const Scalar& a, const SparseVec& src);

void scale(SparseVec& v, const Scalar& a);

// Accumulates (col, value) contributions in arbitrary order into a SparseVec.
SparseVec collect(std::vector<Entry> terms);

}  // namespace hecke
