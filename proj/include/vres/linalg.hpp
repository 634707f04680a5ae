#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vres/field.hpp"

namespace vres {

using DenseRow = std::vector<coef>;
using DenseMat = std::vector<DenseRow>;

// sparse row: (column, value) sorted by column, no zeros
using SparseRow = std::vector<std::pair<int, coef>>;

struct SparseMat {
    int ncols = 0;
    std::vector<SparseRow> rows;
};

// Row echelon form in place; returns pivot columns in row order.
std::vector<int> rowEchelon(DenseMat& m, const Field& F, bool reduced = false);

std::size_t denseRank(DenseMat m, const Field& F);
std::size_t sparseRank(SparseMat m, const Field& F);

// Dense below this many columns, sparse Markowitz elimination above.
inline constexpr int kSparseThreshold = 2000;
std::size_t rank(const SparseMat& m, const Field& F);

// Basis of {x : m x = 0}, ncols = length of x.
std::vector<DenseRow> kernelBasis(DenseMat m, int ncols, const Field& F);

// Columns of `extra` (given as vectors) extending span(base) ; returns indices of a
// maximal subset of `extra` independent modulo span(base).
std::vector<int> extendBasis(const std::vector<DenseRow>& base, const std::vector<DenseRow>& extra, int dim,
                             const Field& F);

}  // namespace vres
