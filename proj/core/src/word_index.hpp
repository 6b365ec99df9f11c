#pragma once

// Helpers shared by the bar and Hochschild constructions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <unordered_map>
#include <vector>

#include "kdual/dga.hpp"

namespace kdual::detail {

struct LettersHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = v.size();
    for (std::size_t x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <class T>
using LettersMap = std::unordered_map<std::vector<std::size_t>, T, LettersHash>;

/// Algebra degrees a bar or Hochschild construction on w reads: letters,
/// coefficients and products feeding chains in degrees [w.lo - 1, w.hi + 1].
inline DegreeRange algebra_range_for(const DGAlgebra& a, const TruncationWindow& w) {
  if (a.connectivity() == Connectivity::connective) return {0, std::max(0, w.hi) + 2};
  return {std::min(0, w.lo) - 2, 0};
}

/// Calls visit(letters, degree) for every word of ideal letters of length at
/// most max_length with start + sum(|a_i| + 1) in [lo, hi]. Words come in
/// lexicographic order of letter indices. Shifted letter degrees all share
/// one sign (the connectivity class), which is what makes pruning valid.
inline void enumerate_words(const DGAlgebra& a, int start, int lo, int hi,
                            std::size_t max_length,
                            const std::function<void(const std::vector<std::size_t>&, int)>& visit) {
  const std::vector<std::size_t> ideal = a.ideal();
  const bool increasing = a.connectivity() == Connectivity::connective;
  std::vector<std::size_t> word;
  std::function<void(int)> rec = [&](int degree) {
    if (lo <= degree && degree <= hi) visit(word, degree);
    if (word.size() >= max_length) return;
    for (std::size_t letter : ideal) {
      int next = degree + a.degree(letter) + 1;
      if (increasing ? next > hi : next < lo) continue;
      word.push_back(letter);
      rec(next);
      word.pop_back();
    }
  };
  rec(start);
}

}  // namespace kdual::detail
