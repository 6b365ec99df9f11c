#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kdual/chain_complex.hpp"
#include "kdual/linear.hpp"
#include "kdual/sparse_matrix.hpp"

namespace kdual::testing {

/// Random sparse matrix with small integer entries (reduced into the field).
inline SparseMatrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                  double density, std::mt19937_64& rng, int magnitude = 3) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> value(-magnitude, magnitude);
  SparseMatrix::Builder b(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) b.add(r, c, mpq_class(value(rng)));
  return std::move(b).build();
}

/// Random bounded complex on degrees [lo, hi]. Each d_n is K * R with K a
/// kernel basis of d_{n-1}, so d_{n-1} d_n = 0 by construction.
inline ChainComplex random_complex(const FieldSpec& field, int lo, int hi, std::size_t max_dim,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  GradedBasis basis(field);
  std::map<int, std::size_t> dims;
  for (int n = lo; n <= hi; ++n) {
    dims[n] = dim(rng);
    for (std::size_t i = 0; i < dims[n]; ++i) basis.add(n, "e" + std::to_string(n) + "_" + std::to_string(i));
  }
  std::map<int, SparseMatrix> diffs;
  SparseMatrix below(field, 0, dims[lo]);
  for (int n = lo + 1; n <= hi; ++n) {
    SparseMatrix k = kernel_basis(below);
    SparseMatrix r = random_matrix(field, k.cols(), dims[n], 0.5, rng);
    SparseMatrix d = k * r;
    diffs.emplace(n, d);
    below = d;
  }
  return ChainComplex(std::move(basis), std::move(diffs));
}

/// One basis element in each of degrees top and top - 1, joined by the identity.
inline ChainComplex identity_pair(const FieldSpec& field, int top) {
  GradedBasis basis(field);
  basis.add(top, "a");
  basis.add(top - 1, "b");
  std::map<int, SparseMatrix> diffs;
  diffs.emplace(top, SparseMatrix::identity(field, 1));
  return ChainComplex(std::move(basis), std::move(diffs));
}

}  // namespace kdual::testing
