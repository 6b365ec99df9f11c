#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kdual/field.hpp"

namespace kdual {

/// Immutable row-major sparse matrix over a FieldSpec.
///
/// Rows are stored as column-sorted lists of nonzero entries in canonical form
/// for the field. 0xn and nx0 shapes are legal.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    mpq_class value;
  };

  /// Accumulates (row, col, value) triplets; duplicates are summed and zeros dropped.
  class Builder {
   public:
    Builder(FieldSpec field, std::size_t rows, std::size_t cols);
    void add(std::size_t row, std::size_t col, const mpq_class& value);
    void add(std::size_t row, std::size_t col, const Scalar& value);
    SparseMatrix build() &&;

   private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Entry>> pending_;
  };

  SparseMatrix() = default;
  /// The zero matrix of the given shape.
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static SparseMatrix identity(FieldSpec field, std::size_t n);
  /// Row-major dense input; convenient in tests.
  static SparseMatrix from_dense(FieldSpec field, const std::vector<std::vector<long>>& rows,
                                 std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  std::span<const Entry> row(std::size_t i) const { return data_[i]; }
  Scalar at(std::size_t i, std::size_t j) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Scalar& factor) const;

  /// Throws DimensionError unless cols() == other.rows(), FieldError on mixed fields.
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;

  /// Columns of *this followed by columns of other (same row count).
  SparseMatrix hstack(const SparseMatrix& other) const;

  bool operator==(const SparseMatrix& other) const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

}  // namespace kdual
