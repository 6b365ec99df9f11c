#include "kdual/bar.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "kdual/errors.hpp"
#include "kdual/parallel.hpp"
#include "word_index.hpp"

namespace kdual {

namespace {

void check_connectivity_for_certification(const DGAlgebra& a) {
  for (std::size_t i : a.ideal()) {
    int d = a.degree(i);
    bool bad = a.connectivity() == Connectivity::connective ? d <= 0 : d >= -1;
    if (bad)
      throw WindowError("window not certifiable: " + a.label(i) + " has degree " +
                        std::to_string(d) + ", which breaks the " +
                        to_string(a.connectivity()) + " hypothesis");
  }
}

std::string window_text(int lo, int hi) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

}  // namespace

int shifted_gap(const DGAlgebra& a) {
  int mu = 0;
  auto consider = [&mu](int value) {
    if (value > 0 && (mu == 0 || value < mu)) mu = value;
  };
  for (std::size_t i : a.ideal()) consider(std::abs(a.degree(i) + 1));
  if (const auto& exact = a.exact_range()) {
    // Letters beyond the exact range have degree > hi (resp. < lo).
    if (a.connectivity() == Connectivity::connective && exact->hi < DegreeRange::kMax)
      consider(exact->hi + 2);
    if (a.connectivity() == Connectivity::simply_coconnective && exact->lo > DegreeRange::kMin)
      consider(-exact->lo);
  }
  return mu;
}

TruncationWindow certify_window(const DGAlgebra& a, int lo, int hi) {
  if (lo > hi) throw WindowError("empty window " + window_text(lo, hi));
  check_connectivity_for_certification(a);
  const int mu = shifted_gap(a);
  if (mu == 0) return {lo, hi, 0, true};
  if (a.connectivity() == Connectivity::simply_coconnective && hi > 0)
    throw WindowError("window " + window_text(lo, hi) +
                      " not certifiable: bar words of a simply coconnective algebra live in "
                      "degrees <= 0");
  if (a.connectivity() == Connectivity::connective && lo < 0)
    throw WindowError("window " + window_text(lo, hi) +
                      " not certifiable: bar words of a connective algebra live in degrees >= 0");
  const long reach = std::max(std::labs(lo), std::labs(hi));
  const std::size_t s_max = static_cast<std::size_t>((reach + mu - 1) / mu) + 1;
  return {lo, hi, s_max, true};
}

void require_certified(const DGAlgebra& a, const TruncationWindow& w) {
  if (!w.certified)
    throw WindowError("window " + window_text(w.lo, w.hi) + " is not certified");
  TruncationWindow need = certify_window(a, w.lo, w.hi);
  if (w.word_bound < need.word_bound)
    throw WindowError("word bound " + std::to_string(w.word_bound) + " is below the " +
                      std::to_string(need.word_bound) + " needed on " + window_text(w.lo, w.hi));
}

std::string word_label(const DGAlgebra& a, const std::vector<std::size_t>& letters) {
  std::string out = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += '|';
    out += a.label(letters[i]);
  }
  return out + "]";
}

const std::vector<Word>& BarComplex::words(int n) const {
  static const std::vector<Word> none;
  auto it = words_.find(n);
  return it == words_.end() ? none : it->second;
}

BarComplex bar_construction(const DGAlgebra& a, const TruncationWindow& w) {
  require_certified(a, w);
  BarComplex out;
  out.algebra_ = a.covering(detail::algebra_range_for(a, w));
  out.window_ = w;
  const DGAlgebra& alg = out.algebra_;
  const FieldSpec& field = alg.field();

  std::map<int, detail::LettersMap<std::size_t>> index;
  GradedBasis basis(field);
  detail::enumerate_words(alg, 0, w.lo - 1, w.hi + 1, w.word_bound,
                          [&](const std::vector<std::size_t>& letters, int degree) {
                            auto& list = out.words_[degree];
                            index[degree].emplace(letters, list.size());
                            list.push_back({letters, degree});
                          });
  for (const auto& [n, list] : out.words_)
    for (const auto& word : list) basis.add(n, word_label(alg, word.letters));

  std::vector<int> degrees;
  for (int n = w.lo; n <= w.hi + 1; ++n)
    if (out.words_.count(n) && out.words_.count(n - 1)) degrees.push_back(n);
  std::vector<std::optional<SparseMatrix>> mats(degrees.size());

  parallel_for(degrees.size(), [&](std::size_t t) {
    const int n = degrees[t];
    const auto& sources = out.words_.at(n);
    const auto& targets = index.at(n - 1);
    SparseMatrix::Builder m(field, out.words_.at(n - 1).size(), sources.size());
    std::vector<std::size_t> scratch;
    auto emit = [&](std::size_t col, const mpq_class& coeff) {
      auto it = targets.find(scratch);
      if (it == targets.end())
        throw Error("bar differential leaves the certified range at " + word_label(alg, scratch));
      m.add(it->second, col, coeff);
    };
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const auto& letters = sources[col].letters;
      const std::size_t s = letters.size();
      long eps = 0;  // e_{i-1}
      for (std::size_t i = 0; i < s; ++i) {
        const long shifted = alg.degree(letters[i]) + 1;
        // internal term, sign (-1)^{e_{i-1}}
        for (const auto& term : alg.differential(letters[i])) {
          if (alg.is_unit(term.index)) continue;
          scratch = letters;
          scratch[i] = term.index;
          emit(col, is_odd(eps) ? mpq_class(-term.coeff.value()) : term.coeff.value());
        }
        eps += shifted;
        // merge term, sign (-1)^{e_i}
        if (i + 1 < s) {
          for (const auto& term : alg.product(letters[i], letters[i + 1])) {
            if (alg.is_unit(term.index)) continue;
            scratch.assign(letters.begin(), letters.begin() + static_cast<long>(i));
            scratch.push_back(term.index);
            scratch.insert(scratch.end(), letters.begin() + static_cast<long>(i) + 2, letters.end());
            emit(col, is_odd(eps) ? mpq_class(-term.coeff.value()) : term.coeff.value());
          }
        }
      }
    }
    mats[t] = std::move(m).build();
  });

  std::map<int, SparseMatrix> diffs;
  for (std::size_t t = 0; t < degrees.size(); ++t)
    if (!mats[t]->is_zero()) diffs.emplace(degrees[t], std::move(*mats[t]));
  out.complex_ = ChainComplex(std::move(basis), std::move(diffs), DegreeRange{w.lo - 1, w.hi + 1},
                              support_of(alg.connectivity()));
  return out;
}

TruncationWindow koszul_bar_window(const DGAlgebra& a, const DegreeRange& needed) {
  if (a.connectivity() == Connectivity::connective) {
    if (needed.lo <= DegreeRange::kMin) throw WindowError("Koszul dual requested on an unbounded range");
    return certify_window(a, 0, std::max(0, -needed.lo - 1));
  }
  if (needed.hi >= DegreeRange::kMax) throw WindowError("Koszul dual requested on an unbounded range");
  return certify_window(a, std::min(0, 1 - needed.hi), 0);
}

DGAlgebra koszul_dual(const DGAlgebra& a, const TruncationWindow& w) {
  require_certified(a, w);
  TruncationWindow bw = certify_window(a, std::min(w.lo, 0), std::max(w.hi, 0));
  bw.word_bound = std::max(bw.word_bound, w.word_bound);
  const BarComplex bar = bar_construction(a, bw);
  const DGAlgebra& alg = bar.algebra();
  const FieldSpec& field = alg.field();
  const ChainComplex& c = bar.complex();

  DGAlgebraBuilder b(field, flipped(a.connectivity()));
  std::map<int, std::vector<std::size_t>> dual_index;
  std::vector<int> bar_degrees = c.basis().degrees();
  // ascending dual degree m = -n
  std::reverse(bar_degrees.begin(), bar_degrees.end());
  std::optional<std::size_t> unit;
  for (int n : bar_degrees) {
    auto& slot = dual_index[n];
    for (const auto& word : bar.words(n)) {
      if (word.letters.empty()) {
        unit = b.add_basis("1", 0);
        slot.push_back(*unit);
      } else {
        slot.push_back(b.add_basis(word_label(alg, word.letters) + "*", -n));
      }
    }
  }
  if (!unit) throw Error("bar construction lacks the empty word");
  b.set_unit(*unit);

  detail::LettersMap<std::size_t> lookup;
  for (int n : bar_degrees) {
    const auto& words = bar.words(n);
    for (std::size_t i = 0; i < words.size(); ++i) lookup.emplace(words[i].letters, dual_index[n][i]);
  }

  // u* v* = (-1)^{|u||v|} (uv)*: read off every split of every word.
  std::vector<std::size_t> u, v;
  for (int n : bar_degrees) {
    const auto& words = bar.words(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto& letters = words[i].letters;
      long du = 0;
      for (std::size_t k = 1; k < letters.size(); ++k) {
        du += alg.degree(letters[k - 1]) + 1;
        long dv = n - du;
        u.assign(letters.begin(), letters.begin() + static_cast<long>(k));
        v.assign(letters.begin() + static_cast<long>(k), letters.end());
        b.add_product(lookup.at(u), lookup.at(v), dual_index[n][i],
                      mpq_class(is_odd(du * dv) ? -1 : 1));
      }
    }
  }
  std::size_t dropped = 0;
  const DegreeRange computed{bw.lo - 1, bw.hi + 1};
  for (int p : bar_degrees)
    for (int q : bar_degrees) {
      if (p == 0 || q == 0 || computed.contains(p + q)) continue;
      dropped += c.dim(p) * c.dim(q);
    }

  // delta(w*) = (-1)^m sum_u <d u, w> u*, for w of bar degree n - 1, m = 1 - n.
  for (const auto& [n, d] : c.differentials()) {
    const mpq_class sign = is_odd(1 - n) ? -1 : 1;
    for (std::size_t row = 0; row < d.rows(); ++row)
      for (const auto& e : d.row(row))
        b.add_differential(dual_index[n - 1][row], dual_index[n][e.col], sign * e.value);
  }

  const bool trivial = a.ideal().empty() && a.complete();
  if (!trivial) {
    if (a.connectivity() == Connectivity::connective)
      b.set_exact_range({-bw.hi - 1, DegreeRange::kMax});
    else
      b.set_exact_range({DegreeRange::kMin, 1 - bw.lo});
    b.set_dropped_products(dropped);
    DGAlgebra source = a;
    b.set_recipe([source](const DegreeRange& r) { return koszul_dual_covering(source, r); });
  }
  b.set_name("D(" + a.name() + ")");
  return std::move(b).build();
}

DGAlgebra koszul_dual_covering(const DGAlgebra& a, const DegreeRange& needed) {
  return koszul_dual(a, koszul_bar_window(a, needed));
}

BettiTable algebra_homology(const DGAlgebra& a, const TruncationWindow& w) {
  const DGAlgebra expanded = a.covering(w.range().widened(1));
  TruncationWindow hw{w.lo, w.hi, w.word_bound, true};
  return homology_dimensions(underlying_complex(expanded), hw);
}

DualityReport double_centralizer_report(const DGAlgebra& a, const TruncationWindow& w) {
  require_certified(a, w);
  BettiTable left = algebra_homology(a, w);
  DGAlgebra da = koszul_dual_covering(a, {0, 0});
  DGAlgebra dda = koszul_dual_covering(da, w.range().widened(1));
  BettiTable right = algebra_homology(dda, w);
  auto report = compare_tables("double-centralizer", std::move(left), std::move(right), w,
                               "homology of the algebra",
                               "homology of the Koszul dual of the Koszul dual, each dual built "
                               "from a certified truncated bar construction");
  report.notes.push_back("D(A) dropped " + std::to_string(da.dropped_products()) +
                         " out-of-range products at its initial truncation");
  return report;
}

}  // namespace kdual
