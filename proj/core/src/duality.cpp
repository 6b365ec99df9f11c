#include "kdual/duality.hpp"

#include <algorithm>
#include <future>

#include "kdual/bar.hpp"
#include "kdual/chain_complex.hpp"
#include "kdual/corpus.hpp"
#include "kdual/errors.hpp"
#include "kdual/hochschild.hpp"

namespace kdual {

namespace {

constexpr const char* kLeftProvenance =
    "linear dual of the Hochschild complex of A (Hochschild homology of A, degrees negated)";
constexpr const char* kRightProvenance =
    "Hochschild homology of the opposite of the Koszul dual of A, the dual built from a certified "
    "truncated bar construction";

TruncationWindow with_bound(const TruncationWindow& w, std::size_t bound) {
  return {w.lo, w.hi, bound, true};
}

// Homology of D(HC(a)) on w; HC(a) sits in degrees <= 0, so only [0, top] is built.
BettiTable dual_hochschild_side(const DGAlgebra& a, const TruncationWindow& w, int top) {
  const TruncationWindow hw = certify_window(a, -top, 0);
  const ChainComplex dual = dual_complex(hochschild_complex(a, hw).complex());
  return homology_dimensions(dual, with_bound(w, hw.word_bound));
}

// HH(D(a)^op) on w; D(a) is connective, so only [0, top] is built.
std::pair<BettiTable, std::size_t> koszul_side(const DGAlgebra& a, const TruncationWindow& w, int top) {
  const DGAlgebra da = koszul_dual_covering(a, {0, top + 2});
  const DGAlgebra op = opposite_dga(da);
  const TruncationWindow hw = certify_window(op, 0, top);
  const HochschildComplex hc = hochschild_complex(op, hw);
  return {homology_dimensions(hc.complex(), with_bound(w, hw.word_bound)), da.dropped_products()};
}

}  // namespace

DualityReport verify_thh_duality(const DGAlgebra& a, const TruncationWindow& w) {
  if (w.lo > w.hi) throw WindowError("empty duality window");
  const TruncationWindow window{w.lo, w.hi, w.word_bound, true};
  const bool hypothesis = a.connectivity() == Connectivity::simply_coconnective && a.finite_total_dimension();
  const int top = std::max(w.hi, 0);

  if (!hypothesis) {
    DualityReport r;
    r.kind = "duality";
    r.window = window;
    r.hypothesis_violated = true;
    r.left_provenance = kLeftProvenance;
    r.right_provenance = kRightProvenance;
    r.notes.push_back(a.connectivity() != Connectivity::simply_coconnective
                          ? "hypothesis violated: the algebra is not simply coconnective"
                          : "hypothesis violated: the algebra has infinite total dimension");
    try {
      const bool connective = a.connectivity() == Connectivity::connective;
      const TruncationWindow hw = connective ? certify_window(a, std::max(0, -w.hi), std::max(0, -w.lo))
                                             : certify_window(a, std::min(0, -w.hi), std::min(0, -w.lo));
      r.left = homology_dimensions(dual_complex(hochschild_complex(a, hw).complex()),
                                   with_bound(window, hw.word_bound));
    } catch (const WindowError& e) {
      r.notes.push_back(std::string("left side not computed: ") + e.what());
    }
    return r;
  }

  // Both sides are independent; run them concurrently.
  auto right = std::async(std::launch::async, [&] { return koszul_side(a, window, top); });
  BettiTable left = dual_hochschild_side(a, window, top);
  auto [right_table, dropped] = right.get();
  DualityReport r = compare_tables("duality", std::move(left), std::move(right_table), window,
                                   kLeftProvenance, kRightProvenance);
  r.notes.push_back("the Koszul dual dropped " + std::to_string(dropped) +
                    " products leaving its computed range");
  return r;
}

DualityReport free_loop_profile(int n, const TruncationWindow& w) {
  if (n < 2) throw LookupError("free loop profile needs n >= 2");
  const DGAlgebra model = corpus_algebra("poly:" + std::to_string(n), FieldSpec::rationals());
  const TruncationWindow cw = certify_window(model, w.lo, w.hi);
  return compare_tables("free-loop", hh_dimensions(model, cw), free_loop_closed_form(n, cw), cw,
                        "Hochschild homology of the free algebra on a class of degree " +
                            std::to_string(n - 1) + " (chains on the loop space of S^" +
                            std::to_string(n) + ")",
                        "closed-form homology of the free loop space of S^" + std::to_string(n) +
                            " over Q");
}

}  // namespace kdual
