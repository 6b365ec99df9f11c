#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kdual/graded.hpp"
#include "kdual/sparse_matrix.hpp"
#include "kdual/validation.hpp"

namespace kdual {

/// Chain complex of degreewise finite vector spaces, homologically graded:
/// the differential d_n maps C_n to C_{n-1} and is stored as a
/// dim C_{n-1} x dim C_n matrix.
///
/// A complex may be a truncation of a larger one. `exact_range` [L, U] then
/// says C_k agrees with the full complex for k in [L, U] and d_k for k in
/// [L+1, U], so homology is trustworthy on [L+1, U-1]. `support` bounds the
/// degrees where the full complex can be nonzero.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(GradedBasis basis, std::map<int, SparseMatrix> differentials,
               std::optional<DegreeRange> exact_range = std::nullopt,
               std::optional<DegreeRange> support = std::nullopt);

  const GradedBasis& basis() const noexcept { return basis_; }
  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t dim(int n) const { return basis_.dim(n); }

  /// d_n; the zero matrix of the right shape when none is stored.
  SparseMatrix differential(int n) const;
  const std::map<int, SparseMatrix>& differentials() const noexcept { return differentials_; }

  /// nullopt for a complete (untruncated) complex.
  const std::optional<DegreeRange>& exact_range() const noexcept { return exact_; }
  const DegreeRange& support() const noexcept { return support_; }
  /// Degrees where homology of this object equals homology of the full complex;
  /// unbounded on a side where the exact range reaches the edge of the support.
  DegreeRange homology_range() const;
  /// H_n is known: n lies in homology_range() or outside the support.
  bool homology_known(int n) const;
  /// Finitely many nonzero degrees, all of them known exactly.
  bool bounded() const;

 private:
  GradedBasis basis_;
  std::map<int, SparseMatrix> differentials_;
  std::optional<DegreeRange> exact_;
  DegreeRange support_ = DegreeRange::all();
};

/// Degree -> dimension over a certified window. Every degree of the window
/// has an entry (zeros included); nothing outside it is reported.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(TruncationWindow window, std::map<int, std::size_t> entries);
  /// All zeros on the window.
  static BettiTable zeros(TruncationWindow window);

  const TruncationWindow& window() const noexcept { return window_; }
  const std::map<int, std::size_t>& entries() const noexcept { return entries_; }
  /// Throws WindowError outside the window.
  std::size_t at(int degree) const;
  void set(int degree, std::size_t dimension);
  /// Same window degrees and dimensions (word bounds may differ).
  bool same_dimensions(const BettiTable& other) const;
  /// Degree-negated copy.
  BettiTable negated() const;

  bool operator==(const BettiTable&) const = default;

 private:
  TruncationWindow window_;
  std::map<int, std::size_t> entries_;
};

/// Checks shape coherence and d_{n-1} d_n = 0 exactly.
ValidationReport validate_complex(const ChainComplex& c);

/// dim H_n = dim ker d_n - rank d_{n+1} for each n of the window. Degrees are
/// processed in parallel (see KDUAL_THREADS). Throws WindowError when the
/// window is uncertified or leaves c.homology_range().
BettiTable homology_dimensions(const ChainComplex& c, const TruncationWindow& window);

/// Linear dual: D(C)_m = (C_{-m})^*, labels suffixed with '*', differential
/// (-1)^m times the transpose of d_{-m+1}.
ChainComplex dual_complex(const ChainComplex& c);

/// Placement of A_i (x) B_{n-i} inside (A (x) B)_n; entry (p, q) of a block
/// sits at offset + p * dim_b + q.
struct TensorBlock {
  int left_degree;
  std::size_t offset;
  std::size_t dim_a;
  std::size_t dim_b;
};
std::vector<TensorBlock> tensor_layout(const ChainComplex& a, const ChainComplex& b, int n);

/// A (x) B restricted to degrees [window.lo - 1, window.hi + 1], with
/// d(a (x) b) = da (x) b + (-1)^|a| a (x) db. Exactness is inferred from the
/// inputs' exact ranges and supports. Throws FieldError on mixed fields.
ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b,
                            const TruncationWindow& window);
/// Full tensor product of two bounded complexes.
ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b);

/// Sum of (-1)^n dim C_n; throws BoundednessError unless c.bounded().
long euler_characteristic(const ChainComplex& c);

}  // namespace kdual
