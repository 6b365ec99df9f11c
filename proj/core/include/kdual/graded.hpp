#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdual/field.hpp"

namespace kdual {

/// Closed interval of degrees; kMin / kMax stand for -inf / +inf.
struct DegreeRange {
  static constexpr int kMin = INT_MIN / 4;
  static constexpr int kMax = INT_MAX / 4;

  int lo = 0;
  int hi = -1;

  static DegreeRange all() { return {kMin, kMax}; }
  static DegreeRange nonnegative() { return {0, kMax}; }
  static DegreeRange nonpositive() { return {kMin, 0}; }

  bool empty() const { return lo > hi; }
  bool contains(int n) const { return lo <= n && n <= hi; }
  bool contains(const DegreeRange& other) const {
    return other.empty() || (lo <= other.lo && other.hi <= hi);
  }
  bool finite() const { return lo > kMin && hi < kMax; }
  DegreeRange intersect(const DegreeRange& other) const {
    return {std::max(lo, other.lo), std::min(hi, other.hi)};
  }
  /// Grows by k on both sides, saturating at the infinities.
  DegreeRange widened(int k) const;
  DegreeRange negated() const;

  bool operator==(const DegreeRange&) const = default;
};

std::string to_string(const DegreeRange& r);

/// A degree interval, a word-length bound and whether truncating at that bound
/// is known to leave homology in the interval unchanged.
struct TruncationWindow {
  int lo = 0;
  int hi = 0;
  std::size_t word_bound = 0;
  bool certified = false;

  /// A certified window with no word-length truncation (plain finite complexes).
  static TruncationWindow exact(int lo, int hi) { return {lo, hi, 0, true}; }

  DegreeRange range() const { return {lo, hi}; }
  bool operator==(const TruncationWindow&) const = default;
};

/// Finitely many nonempty degrees, each with an ordered list of unique labels.
class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(FieldSpec field) : field_(field) {}

  const FieldSpec& field() const noexcept { return field_; }

  /// Appends a label in degree n; throws LookupError on a duplicate.
  std::size_t add(int n, std::string label);
  std::size_t dim(int n) const;
  const std::vector<std::string>& labels(int n) const;
  std::optional<std::size_t> index_of(int n, const std::string& label) const;

  /// Degrees with at least one basis element, ascending.
  std::vector<int> degrees() const;
  std::size_t total_dimension() const;

 private:
  FieldSpec field_;
  std::map<int, std::vector<std::string>> labels_;
  std::map<int, std::map<std::string, std::size_t>> index_;
};

}  // namespace kdual
