#pragma once

#include <string>
#include <vector>

namespace kdual {

/// One failed law, with the degree and basis elements that witness it.
struct Violation {
  std::string law;      // "shape", "d_squared", "associativity", "leibniz", ...
  int degree = 0;
  std::string witness;  // basis label(s), comma separated
  std::string message;
};

/// Outcome of a structural check. Checks never throw; they collect violations.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// One line per violation, first one first.
  std::string summary() const;
};

}  // namespace kdual
