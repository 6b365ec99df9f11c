#pragma once

#include <cstddef>
#include <vector>

#include "kdual/sparse_matrix.hpp"

namespace kdual {

/// Rank over the matrix's field by exact sparse Gaussian elimination.
///
/// Pivots are chosen Markowitz-style: the column with the fewest remaining
/// nonzeros, and within it the entry of smallest absolute value (over Q) or
/// the shortest row (over F_p). Rationals use GMP arithmetic throughout;
/// prime fields run on machine-word residues.
std::size_t rank(const SparseMatrix& m);

/// Basis of the null space of m, returned as the columns of a
/// cols(m) x (cols(m) - rank(m)) matrix K with m * K = 0.
///
/// Each basis vector has a 1 in one non-pivot column and zeros in all other
/// non-pivot columns (the reduced echelon normal form).
SparseMatrix kernel_basis(const SparseMatrix& m);

/// rank(a * b). Throws DimensionError when the shapes do not compose.
std::size_t image_dimension_of_composite(const SparseMatrix& a, const SparseMatrix& b);

/// Dense copy of column j.
std::vector<Scalar> column(const SparseMatrix& m, std::size_t j);

}  // namespace kdual
