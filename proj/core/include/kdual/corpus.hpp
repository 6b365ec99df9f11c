#pragma once

#include <map>
#include <string>
#include <vector>

#include "kdual/chain_complex.hpp"
#include "kdual/dga.hpp"
#include "kdual/field.hpp"
#include "kdual/graded.hpp"

namespace kdual {

/// Computation kinds with shipped expected tables.
inline constexpr const char* kKindHH = "hh";
inline constexpr const char* kKindKoszulDual = "koszul-dual-homology";
inline constexpr const char* kKindDualityLeft = "duality-left";
inline constexpr const char* kKindDualityRight = "duality-right";
inline constexpr const char* kKindFreeLoop = "free-loop";

/// An expected Betti table with the window it was computed on and a note
/// naming the independent method that produced it.
struct ExpectedTable {
  BettiTable table;
  std::string provenance;
};

/// A built-in example algebra.
struct CorpusEntry {
  std::string name;
  std::string description;
  DGAlgebra algebra;
  /// Certified window on which Hochschild homology is tabulated.
  TruncationWindow default_window;
  /// Shipped expected tables for this field, keyed by computation kind.
  std::map<std::string, ExpectedTable> expected;
};

/// Names with shipped expected tables.
std::vector<std::string> corpus_names();

/// The algebra behind a corpus name:
///   unit                k
///   sphere-odd:n        Lambda(x), |x| = -n, n odd >= 3
///   sphere-even:n       k[x]/x^2, |x| = -n, n even >= 2
///   proj-plane-like     k[x]/x^3, |x| = -2
///   poly:n              free algebra k<y>, |y| = n - 1 >= 1 (connective,
///                       truncated and expandable)
///   sq0:g:d             square-zero algebra on g generators of degree d <= -2
/// Throws LookupError for anything else.
DGAlgebra corpus_algebra(const std::string& name, const FieldSpec& field = {});

/// The entry with every table shipped for `field` (possibly none).
CorpusEntry corpus_get(const std::string& name, const FieldSpec& field = {});

/// Throws LookupError unless a table of that kind ships for (name, field).
ExpectedTable corpus_expected(const std::string& name, const std::string& kind,
                              const FieldSpec& field = {});

/// Closed-form Betti profile of the free loop space of the n-sphere over Q.
BettiTable free_loop_closed_form(int n, const TruncationWindow& w);

/// Parses the "degree,dimension" CSV used for expected tables and reports.
BettiTable parse_table_csv(const std::string& text, TruncationWindow window);
/// As above, on the exact window spanned by the rows.
BettiTable parse_table_csv(const std::string& text);

}  // namespace kdual
