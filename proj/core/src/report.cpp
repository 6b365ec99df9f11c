#include "kdual/report.hpp"

#include <utility>

namespace kdual {

DualityReport compare_tables(std::string kind, BettiTable left, BettiTable right,
                             TruncationWindow window, std::string left_provenance,
                             std::string right_provenance) {
  DualityReport r;
  r.kind = std::move(kind);
  r.window = window;
  r.pass = true;
  for (int n = window.lo; n <= window.hi; ++n) {
    if (left.at(n) != right.at(n)) {
      r.pass = false;
      r.first_mismatch = n;
      break;
    }
  }
  r.left = std::move(left);
  r.right = std::move(right);
  r.left_provenance = std::move(left_provenance);
  r.right_provenance = std::move(right_provenance);
  return r;
}

}  // namespace kdual
