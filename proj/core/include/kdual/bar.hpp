#pragma once

#include <cstddef>
#include <vector>

#include "kdual/chain_complex.hpp"
#include "kdual/dga.hpp"
#include "kdual/graded.hpp"
#include "kdual/report.hpp"

namespace kdual {

/// A word [a_1|...|a_s] of augmentation-ideal letters (basis indices of the
/// algebra); its degree is sum(|a_i| + 1).
struct Word {
  std::vector<std::size_t> letters;
  int degree = 0;
};

/// Smallest |deg + 1| over the augmentation ideal, with letters not yet
/// expanded in a truncated algebra bounded by its exact range. 0 for an
/// empty ideal.
int shifted_gap(const DGAlgebra& a);

/// Word-length bound making length-truncated bar and Hochschild complexes
/// exact on [lo, hi]: s_max = ceil(max(|lo|, |hi|) / mu) + 1 where mu is the
/// shifted gap. Coconnective algebras need hi <= 0 and connective ones
/// lo >= 0; other windows, or algebras breaking their connectivity class,
/// raise WindowError. An empty augmentation ideal certifies every window.
TruncationWindow certify_window(const DGAlgebra& a, int lo, int hi);

/// Throws WindowError unless `w` is certified and its word bound is at least
/// the one certify_window derives for a on the same degrees.
void require_certified(const DGAlgebra& a, const TruncationWindow& w);

/// Normalized bar construction B(k, A, k), truncated to word length
/// w.word_bound and degrees [w.lo - 1, w.hi + 1]:
///   d = sum (-1)^{e_{i-1}} [..|d a_i|..] + sum (-1)^{e_i} [..|a_i a_{i+1}|..]
/// with e_j = sum_{m <= j} (|a_m| + 1).
class BarComplex {
 public:
  const ChainComplex& complex() const noexcept { return complex_; }
  /// The algebra as expanded to cover the window.
  const DGAlgebra& algebra() const noexcept { return algebra_; }
  const TruncationWindow& window() const noexcept { return window_; }
  /// Words of degree n, in basis order of complex().basis().labels(n).
  const std::vector<Word>& words(int n) const;
  std::size_t word_length(int n, std::size_t index) const { return words(n)[index].letters.size(); }

 private:
  friend BarComplex bar_construction(const DGAlgebra&, const TruncationWindow&);
  ChainComplex complex_;
  DGAlgebra algebra_;
  TruncationWindow window_;
  std::map<int, std::vector<Word>> words_;
};

BarComplex bar_construction(const DGAlgebra& a, const TruncationWindow& w);

/// Label of a bar word, e.g. "[x|y]"; the empty word is "[]".
std::string word_label(const DGAlgebra& a, const std::vector<std::size_t>& letters);

/// The Koszul dual: linear dual of the bar construction on w (widened to
/// reach degree 0), with product u* v* = (-1)^{|u||v|} (uv)* dual to
/// deconcatenation, unit the dual of the empty word, and differential
/// (-1)^m times the transpose as in dual_complex. The result is truncated
/// (products leaving the computed range are dropped and counted) and
/// carries a recipe that recomputes it on any larger range.
DGAlgebra koszul_dual(const DGAlgebra& a, const TruncationWindow& w);

/// Koszul dual exact on at least `needed` (degrees of the dual).
DGAlgebra koszul_dual_covering(const DGAlgebra& a, const DegreeRange& needed);

/// Bar window (bar degrees) whose dual covers `needed` in dual degrees.
TruncationWindow koszul_bar_window(const DGAlgebra& a, const DegreeRange& needed);

/// Compares H(a) with H(D(D(a))) on w.
DualityReport double_centralizer_report(const DGAlgebra& a, const TruncationWindow& w);

/// Homology of the underlying complex of a on w (expanding a if needed).
BettiTable algebra_homology(const DGAlgebra& a, const TruncationWindow& w);

}  // namespace kdual
