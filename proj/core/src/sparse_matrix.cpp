#include "kdual/sparse_matrix.hpp"

#include <algorithm>
#include <string>

#include "kdual/errors.hpp"

namespace kdual {

namespace {

using Entry = SparseMatrix::Entry;

// Sorts by column, sums duplicates, canonicalizes and drops zeros.
std::vector<Entry> compact(std::vector<Entry> row, const FieldSpec& field) {
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::vector<Entry> out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().col == e.col)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  std::vector<Entry> result;
  result.reserve(out.size());
  for (auto& e : out) {
    mpq_class v = field.normalize(e.value);
    if (sgn(v) != 0) result.push_back({e.col, std::move(v)});
  }
  return result;
}

void require_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw FieldError("mixed fields: " + a.name() + " and " + b.name());
}

}  // namespace

SparseMatrix::Builder::Builder(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), pending_(rows) {}

void SparseMatrix::Builder::add(std::size_t row, std::size_t col, const mpq_class& value) {
  if (row >= rows_ || col >= cols_)
    throw DimensionError("entry (" + std::to_string(row) + "," + std::to_string(col) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  if (sgn(value) != 0) pending_[row].push_back({col, value});
}

void SparseMatrix::Builder::add(std::size_t row, std::size_t col, const Scalar& value) {
  require_field(field_, value.field());
  add(row, col, value.value());
}

SparseMatrix SparseMatrix::Builder::build() && {
  SparseMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = compact(std::move(pending_[i]), field_);
  return m;
}

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(FieldSpec field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, mpq_class(1)});
  return m;
}

SparseMatrix SparseMatrix::from_dense(FieldSpec field, const std::vector<std::vector<long>>& rows,
                                      std::size_t cols) {
  Builder b(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged dense input");
    for (std::size_t j = 0; j < cols; ++j) b.add(i, j, mpq_class(rows[i][j]));
  }
  return std::move(b).build();
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("index out of range");
  const auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) return Scalar(field_, it->value);
  return Scalar::zero(field_);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
  return t;
}

SparseMatrix SparseMatrix::scaled(const Scalar& factor) const {
  require_field(field_, factor.field());
  Builder b(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) b.add(i, e.col, e.value * factor.value());
  return std::move(b).build();
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  require_field(field_, other.field_);
  if (cols_ != other.rows_)
    throw DimensionError("cannot compose " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " with " + std::to_string(other.rows_) + "x" +
                         std::to_string(other.cols_));
  SparseMatrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::vector<Entry> acc;
    for (const auto& e : data_[i])
      for (const auto& f : other.data_[e.col]) acc.push_back({f.col, e.value * f.value});
    out.data_[i] = compact(std::move(acc), field_);
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  require_field(field_, other.field_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("shape mismatch in sum");
  SparseMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::vector<Entry> acc(data_[i].begin(), data_[i].end());
    acc.insert(acc.end(), other.data_[i].begin(), other.data_[i].end());
    out.data_[i] = compact(std::move(acc), field_);
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  return *this + other.scaled(Scalar(field_, -1L));
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& other) const {
  require_field(field_, other.field_);
  if (rows_ != other.rows_) throw DimensionError("hstack needs equal row counts");
  SparseMatrix out(field_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out.data_[i] = data_[i];
    for (const auto& e : other.data_[i]) out.data_[i].push_back({e.col + cols_, e.value});
  }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (data_[i].size() != other.data_[i].size()) return false;
    for (std::size_t k = 0; k < data_[i].size(); ++k)
      if (data_[i][k].col != other.data_[i][k].col || data_[i][k].value != other.data_[i][k].value)
        return false;
  }
  return true;
}

}  // namespace kdual
