#include "kdual/linear.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

namespace kdual {

namespace {

struct RationalOps {
  using value_type = mpq_class;

  value_type from(const mpq_class& v) const { return v; }
  mpq_class to(const value_type& v) const { return v; }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type inv(const value_type& v) const { return 1 / v; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& v) const { return -v; }
  // Smaller absolute value is the better pivot.
  int compare(const value_type& a, const value_type& b) const { return cmp(abs(a), abs(b)); }
};

struct ModularOps {
  std::uint64_t p;

  using value_type = std::uint64_t;

  value_type from(const mpq_class& v) const { return v.get_num().get_ui(); }
  mpq_class to(const value_type& v) const { return mpq_class(static_cast<unsigned long>(v)); }
  bool is_zero(const value_type& v) const { return v == 0; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type neg(value_type v) const { return v == 0 ? 0 : p - v; }
  value_type inv(value_type v) const {
    // Fermat: v^(p-2).
    value_type result = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  int compare(value_type, value_type) const { return 0; }
};

template <class Ops>
class Eliminator {
 public:
  using T = typename Ops::value_type;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  Eliminator(const SparseMatrix& m, Ops ops)
      : ops_(std::move(ops)),
        cols_(m.cols()),
        rows_(m.rows()),
        active_(m.rows(), true),
        col_count_(m.cols(), 0),
        col_rows_(m.cols()),
        pivot_row_of_col_(m.cols(), kNone),
        stamp_(m.rows(), 0) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto& row = rows_[i];
      row.reserve(m.row(i).size());
      for (const auto& e : m.row(i)) {
        row.emplace_back(static_cast<std::uint32_t>(e.col), ops_.from(e.value));
        ++col_count_[e.col];
        col_rows_[e.col].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  void eliminate() {
    while (true) {
      std::size_t best_col = kNone;
      std::size_t best_count = std::numeric_limits<std::size_t>::max();
      for (std::size_t c = 0; c < cols_; ++c)
        if (col_count_[c] > 0 && col_count_[c] < best_count) {
          best_count = col_count_[c];
          best_col = c;
          if (best_count == 1) break;
        }
      if (best_col == kNone) return;
      pivot_on(best_col);
    }
  }

  std::size_t rank() const { return pivots_.size(); }

  // Clears pivot columns from earlier pivot rows, giving reduced echelon form.
  void back_substitute() {
    for (std::size_t k = pivots_.size(); k-- > 0;) {
      const auto [prow, pcol] = pivots_[k];
      for (std::size_t j = 0; j < k; ++j) {
        auto& row = rows_[pivots_[j].first];
        auto it = find(row, pcol);
        if (it == row.end()) continue;
        T factor = it->second;
        row = axpy(row, factor, rows_[prow]);
      }
    }
  }

  SparseMatrix kernel(const FieldSpec& field) const {
    std::vector<std::size_t> free_index(cols_, kNone);
    std::size_t nfree = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_of_col_[c] == kNone) free_index[c] = nfree++;
    SparseMatrix::Builder b(field, cols_, nfree);
    for (std::size_t c = 0; c < cols_; ++c)
      if (free_index[c] != kNone) b.add(c, free_index[c], mpq_class(1));
    for (const auto& [prow, pcol] : pivots_)
      for (const auto& [c, v] : rows_[prow])
        if (free_index[c] != kNone) b.add(pcol, free_index[c], ops_.to(ops_.neg(v)));
    return std::move(b).build();
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  typename Row::const_iterator find(const Row& row, std::size_t col) const {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it : row.end();
  }
  typename Row::iterator find(Row& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it : row.end();
  }

  // target - factor * pivot, where pivot is normalized.
  Row axpy(const Row& target, const T& factor, const Row& pivot) {
    Row out;
    out.reserve(target.size() + pivot.size());
    auto a = target.begin();
    auto b = pivot.begin();
    while (a != target.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == target.end() || b->first < a->first) {
        out.emplace_back(b->first, ops_.neg(ops_.mul(factor, b->second)));
        ++b;
      } else {
        T v = ops_.sub(a->second, ops_.mul(factor, b->second));
        if (!ops_.is_zero(v)) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    return out;
  }

  void pivot_on(std::size_t col) {
    ++epoch_;
    std::vector<std::uint32_t> candidates;
    auto& listed = col_rows_[col];
    for (auto r : listed) {
      if (!active_[r] || stamp_[r] == epoch_) continue;
      stamp_[r] = epoch_;
      if (find(rows_[r], col) != rows_[r].end()) candidates.push_back(r);
    }
    listed = candidates;

    std::uint32_t prow = candidates.front();
    for (auto r : candidates) {
      int c = ops_.compare(find(rows_[r], col)->second, find(rows_[prow], col)->second);
      if (c < 0 || (c == 0 && rows_[r].size() < rows_[prow].size())) prow = r;
    }

    active_[prow] = false;
    for (const auto& e : rows_[prow]) --col_count_[e.first];
    T scale = ops_.inv(find(rows_[prow], col)->second);
    for (auto& e : rows_[prow]) e.second = ops_.mul(e.second, scale);
    pivot_row_of_col_[col] = prow;
    pivots_.emplace_back(prow, col);

    for (auto r : candidates) {
      if (r == prow) continue;
      Row& row = rows_[r];
      T factor = find(row, col)->second;
      for (const auto& e : row) --col_count_[e.first];
      Row updated = axpy(row, factor, rows_[prow]);
      // Register fill-in so later column scans see this row.
      auto old = row.begin();
      for (const auto& e : updated) {
        while (old != row.end() && old->first < e.first) ++old;
        if (old == row.end() || old->first != e.first) col_rows_[e.first].push_back(r);
        ++col_count_[e.first];
      }
      row = std::move(updated);
    }
  }

  Ops ops_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<bool> active_;
  std::vector<std::size_t> col_count_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> pivot_row_of_col_;
  std::vector<std::pair<std::uint32_t, std::size_t>> pivots_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

template <class F>
auto with_ops(const FieldSpec& field, F&& f) {
  if (field.is_rational()) return f(RationalOps{});
  return f(ModularOps{field.characteristic()});
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return with_ops(m.field(), [&](auto ops) {
    Eliminator<decltype(ops)> e(m, ops);
    e.eliminate();
    return e.rank();
  });
}

SparseMatrix kernel_basis(const SparseMatrix& m) {
  return with_ops(m.field(), [&](auto ops) {
    Eliminator<decltype(ops)> e(m, ops);
    e.eliminate();
    e.back_substitute();
    return e.kernel(m.field());
  });
}

std::size_t image_dimension_of_composite(const SparseMatrix& a, const SparseMatrix& b) {
  return rank(a * b);
}

std::vector<Scalar> column(const SparseMatrix& m, std::size_t j) {
  std::vector<Scalar> v(m.rows(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

}  // namespace kdual
