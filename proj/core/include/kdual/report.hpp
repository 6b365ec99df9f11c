#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdual/chain_complex.hpp"

namespace kdual {

/// Two Betti tables side by side with a degreewise verdict.
struct DualityReport {
  std::string kind;  // "duality", "double-centralizer", "shuffle", "free-loop"
  BettiTable left;
  BettiTable right;
  TruncationWindow window;
  bool pass = false;
  std::optional<int> first_mismatch;
  std::string left_provenance;
  std::string right_provenance;
  /// Set when an input violates a hypothesis of the statement being checked.
  bool hypothesis_violated = false;
  /// Extra named yes/no checks folded into the verdict (e.g. "chain_map").
  std::map<std::string, bool> checks;
  std::vector<std::string> notes;

  bool operator==(const DualityReport&) const = default;
};

/// Fills verdict and first mismatch by comparing left and right on window.
DualityReport compare_tables(std::string kind, BettiTable left, BettiTable right,
                             TruncationWindow window, std::string left_provenance,
                             std::string right_provenance);

}  // namespace kdual
