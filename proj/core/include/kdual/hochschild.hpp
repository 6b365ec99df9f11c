#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kdual/chain_complex.hpp"
#include "kdual/dga.hpp"
#include "kdual/graded.hpp"
#include "kdual/report.hpp"
#include "kdual/sparse_matrix.hpp"

namespace kdual {

/// A Hochschild chain a_0 (x) [a_1|...|a_s]: a_0 any basis element, the
/// letters augmentation-ideal elements. Degree |a_0| + sum(|a_i| + 1).
struct HochschildChain {
  std::size_t coefficient = 0;
  std::vector<std::size_t> letters;
  int degree = 0;
};

/// Normalized Hochschild (cyclic bar) complex, truncated to word length
/// w.word_bound and degrees [w.lo - 1, w.hi + 1]. With
/// h_j = |a_0| + sum_{m <= j} (|a_m| + 1):
///   d(a_0[a_1|...|a_s]) = (d a_0)[...]
///     - sum_i (-1)^{h_{i-1}} a_0[..|d a_i|..]
///     + (-1)^{|a_0|} (a_0 a_1)[a_2|...]
///     + sum_{i<s} (-1)^{h_i} a_0[..|a_i a_{i+1}|..]
///     - (-1)^{(|a_s|+1) h_{s-1}} (a_s a_0)[a_1|...|a_{s-1}]
class HochschildComplex {
 public:
  const ChainComplex& complex() const noexcept { return complex_; }
  /// The algebra as expanded to cover the window.
  const DGAlgebra& algebra() const noexcept { return algebra_; }
  const TruncationWindow& window() const noexcept { return window_; }
  /// Chains of degree n in basis order.
  const std::vector<HochschildChain>& chains(int n) const;
  std::size_t word_length(int n, std::size_t index) const { return chains(n)[index].letters.size(); }

 private:
  friend HochschildComplex hochschild_complex(const DGAlgebra&, const TruncationWindow&);
  ChainComplex complex_;
  DGAlgebra algebra_;
  TruncationWindow window_;
  std::map<int, std::vector<HochschildChain>> chains_;
};

/// Requires w certified for a (the bar rule; the extra factor a_0 only
/// moves degrees towards the side where word length is already bounded).
HochschildComplex hochschild_complex(const DGAlgebra& a, const TruncationWindow& w);

/// Homology of hochschild_complex(a, w) on w.
BettiTable hh_dimensions(const DGAlgebra& a, const TruncationWindow& w);

/// The shuffle map HC(a) (x) HC(b) -> HC(a (x) b) on degrees [w.lo - 1, w.hi + 1].
class ShuffleMap {
 public:
  /// HC(a) (x) HC(b) via tensor_complex.
  const ChainComplex& source() const noexcept { return source_; }
  const ChainComplex& target() const noexcept { return target_; }
  const TruncationWindow& window() const noexcept { return window_; }
  /// Degree n -> dim target_n x dim source_n matrix.
  const std::map<int, SparseMatrix>& components() const noexcept { return components_; }
  SparseMatrix component(int n) const;
  /// Degrees n in [w.lo, w.hi + 1] with D sh_n != sh_{n-1} D.
  std::vector<int> chain_map_defects() const;
  /// Rank of the induced map H_n(source) -> H_n(target), n in the window.
  std::size_t homology_rank(int n) const;

 private:
  friend ShuffleMap shuffle_map(const DGAlgebra&, const DGAlgebra&, const TruncationWindow&);
  ChainComplex source_;
  ChainComplex target_;
  TruncationWindow window_;
  std::map<int, SparseMatrix> components_;
};

/// (a_0[a_1..a_p]) (x) (b_0[b_1..b_q]) maps to the signed sum over
/// (p,q)-shuffles of (a_0 (x) b_0)[interleaved a_i (x) 1, 1 (x) b_j], the sign
/// being (-1)^{|b_0| e_p(a)} times (-1)^{(|a_i|+1)(|b_j|+1)} for each b_j
/// placed before a_i. The window is certified separately for a, b and a (x) b;
/// failures raise WindowError.
ShuffleMap shuffle_map(const DGAlgebra& a, const DGAlgebra& b, const TruncationWindow& w);

/// Left: HH(a (x) b); right: the Kunneth convolution of HH(a) and HH(b).
/// Passes when the tables agree, the shuffle map is a chain map, and it is
/// an isomorphism on homology throughout the window.
DualityReport shuffle_monoidality_check(const DGAlgebra& a, const DGAlgebra& b, const TruncationWindow& w);

}  // namespace kdual
