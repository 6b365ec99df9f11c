#include "kdual/chain_complex.hpp"

#include <algorithm>
#include <sstream>

#include "kdual/errors.hpp"
#include "kdual/linear.hpp"
#include "kdual/parallel.hpp"

namespace kdual {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations)
    os << v.law << " violated in degree " << v.degree << " at " << v.witness << ": " << v.message
       << "\n";
  return os.str();
}

ChainComplex::ChainComplex(GradedBasis basis, std::map<int, SparseMatrix> differentials,
                           std::optional<DegreeRange> exact_range,
                           std::optional<DegreeRange> support)
    : basis_(std::move(basis)), differentials_(std::move(differentials)), exact_(exact_range) {
  if (support) {
    support_ = *support;
  } else {
    auto degrees = basis_.degrees();
    support_ = degrees.empty() ? DegreeRange{0, -1} : DegreeRange{degrees.front(), degrees.back()};
    if (exact_) support_ = DegreeRange::all();
  }
}

SparseMatrix ChainComplex::differential(int n) const {
  auto it = differentials_.find(n);
  if (it != differentials_.end()) return it->second;
  return SparseMatrix(field(), dim(n - 1), dim(n));
}

DegreeRange ChainComplex::homology_range() const {
  if (!exact_) return DegreeRange::all();
  // At an edge of the support the neighbouring chain group is zero, so the
  // boundary degree itself is still exact.
  DegreeRange r = exact_->widened(-1);
  if (exact_->lo <= support_.lo) r.lo = DegreeRange::kMin;
  if (exact_->hi >= support_.hi) r.hi = DegreeRange::kMax;
  return r;
}

bool ChainComplex::homology_known(int n) const {
  return homology_range().contains(n) || !support_.contains(n);
}

bool ChainComplex::bounded() const {
  if (!exact_) return true;
  return support_.finite() && exact_->contains(support_);
}

BettiTable::BettiTable(TruncationWindow window, std::map<int, std::size_t> entries)
    : window_(window), entries_(std::move(entries)) {
  for (const auto& [n, d] : entries_)
    if (n < window_.lo || n > window_.hi)
      throw WindowError("Betti entry in degree " + std::to_string(n) + " outside window");
}

BettiTable BettiTable::zeros(TruncationWindow window) {
  std::map<int, std::size_t> entries;
  for (int n = window.lo; n <= window.hi; ++n) entries[n] = 0;
  return BettiTable(window, std::move(entries));
}

std::size_t BettiTable::at(int degree) const {
  if (degree < window_.lo || degree > window_.hi)
    throw WindowError("degree " + std::to_string(degree) + " outside the certified window");
  auto it = entries_.find(degree);
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int degree, std::size_t dimension) {
  if (degree < window_.lo || degree > window_.hi)
    throw WindowError("degree " + std::to_string(degree) + " outside the certified window");
  entries_[degree] = dimension;
}

bool BettiTable::same_dimensions(const BettiTable& other) const {
  if (window_.lo != other.window_.lo || window_.hi != other.window_.hi) return false;
  for (int n = window_.lo; n <= window_.hi; ++n)
    if (at(n) != other.at(n)) return false;
  return true;
}

BettiTable BettiTable::negated() const {
  TruncationWindow w = window_;
  w.lo = -window_.hi;
  w.hi = -window_.lo;
  std::map<int, std::size_t> entries;
  for (const auto& [n, d] : entries_) entries[-n] = d;
  return BettiTable(w, std::move(entries));
}

ValidationReport validate_complex(const ChainComplex& c) {
  ValidationReport report;
  const auto& basis = c.basis();
  for (const auto& [n, d] : c.differentials()) {
    if (!(d.field() == c.field())) {
      report.violations.push_back({"field", n, "", "differential over " + d.field().name()});
      continue;
    }
    if (d.rows() != c.dim(n - 1) || d.cols() != c.dim(n)) {
      std::ostringstream msg;
      msg << "d_" << n << " is " << d.rows() << "x" << d.cols() << ", expected " << c.dim(n - 1)
          << "x" << c.dim(n);
      report.violations.push_back({"shape", n, "", msg.str()});
    }
  }
  if (!report.ok()) return report;
  for (const auto& [n, d] : c.differentials()) {
    auto below = c.differentials().find(n - 1);
    if (below == c.differentials().end()) continue;
    SparseMatrix dd = below->second * d;
    for (std::size_t i = 0; i < dd.rows(); ++i) {
      if (dd.row(i).empty()) continue;
      std::size_t j = dd.row(i).front().col;
      report.violations.push_back({"d_squared", n, basis.labels(n)[j],
                                   "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) +
                                       " has coefficient " + dd.row(i).front().value.get_str() +
                                       " on " + basis.labels(n - 2)[i]});
      break;
    }
  }
  return report;
}

BettiTable homology_dimensions(const ChainComplex& c, const TruncationWindow& window) {
  if (!window.certified) throw WindowError("window " + to_string(window.range()) + " is not certified");
  if (window.lo > window.hi) return BettiTable(window, {});
  for (int n = window.lo; n <= window.hi; ++n)
    if (!c.homology_known(n))
      throw WindowError("homology requested on " + to_string(window.range()) +
                        " but degree " + std::to_string(n) + " is outside the certified range " +
                        to_string(c.homology_range()));
  // ranks[k] = rank d_{lo + k}, k = 0 .. width
  const std::size_t width = static_cast<std::size_t>(window.hi - window.lo) + 1;
  std::vector<std::size_t> ranks(width + 1, 0);
  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k <= width; ++k) {
    int n = window.lo + static_cast<int>(k);
    if (c.dim(n) > 0 && c.dim(n - 1) > 0) todo.push_back(k);
  }
  parallel_for(todo.size(), [&](std::size_t t) {
    std::size_t k = todo[t];
    ranks[k] = rank(c.differential(window.lo + static_cast<int>(k)));
  });
  std::map<int, std::size_t> entries;
  for (std::size_t k = 0; k < width; ++k) {
    int n = window.lo + static_cast<int>(k);
    entries[n] = c.dim(n) - ranks[k] - ranks[k + 1];
  }
  return BettiTable(window, std::move(entries));
}

ChainComplex dual_complex(const ChainComplex& c) {
  GradedBasis basis(c.field());
  for (int n : c.basis().degrees())
    for (const auto& label : c.basis().labels(n)) basis.add(-n, label + "*");
  std::map<int, SparseMatrix> diffs;
  // d_k : C_k -> C_{k-1} dualizes to a map D_{1-k} -> D_{-k}, i.e. delta_m with m = 1 - k.
  for (const auto& [k, d] : c.differentials()) {
    int m = 1 - k;
    diffs.emplace(m, d.transpose().scaled(sign_scalar(c.field(), m)));
  }
  std::optional<DegreeRange> exact;
  if (c.exact_range()) exact = c.exact_range()->negated();
  return ChainComplex(std::move(basis), std::move(diffs), exact, c.support().negated());
}

std::vector<TensorBlock> tensor_layout(const ChainComplex& a, const ChainComplex& b, int n) {
  std::vector<TensorBlock> blocks;
  std::size_t offset = 0;
  for (int i : a.basis().degrees()) {
    std::size_t db = b.dim(n - i);
    if (db == 0) continue;
    std::size_t da = a.dim(i);
    blocks.push_back({i, offset, da, db});
    offset += da * db;
  }
  return blocks;
}

namespace {

// Exactness of (A (x) B)_n given the inputs' exact ranges and supports.
bool tensor_degree_exact(const ChainComplex& a, const ChainComplex& b, int n) {
  auto ea = a.exact_range().value_or(DegreeRange::all());
  auto eb = b.exact_range().value_or(DegreeRange::all());
  if (!a.exact_range()) ea = DegreeRange::all();
  if (!b.exact_range()) eb = DegreeRange::all();
  const auto& sa = a.support();
  const auto& sb = b.support();
  // i ranges over sa intersected with n - sb.
  long long lo = std::max<long long>(sa.lo, sb.hi >= DegreeRange::kMax ? DegreeRange::kMin
                                                                        : (long long)n - sb.hi);
  long long hi = std::min<long long>(sa.hi, sb.lo <= DegreeRange::kMin ? DegreeRange::kMax
                                                                        : (long long)n - sb.lo);
  if (lo > hi) return true;
  if (lo < ea.lo || hi > ea.hi) return false;
  long long jlo = (long long)n - hi, jhi = (long long)n - lo;
  return jlo >= eb.lo && jhi <= eb.hi;
}

ChainComplex tensor_impl(const ChainComplex& a, const ChainComplex& b, int lo, int hi,
                         bool complete) {
  if (!(a.field() == b.field()))
    throw FieldError("tensor of complexes over " + a.field().name() + " and " + b.field().name());
  const FieldSpec field = a.field();
  GradedBasis basis(field);
  std::map<int, std::vector<TensorBlock>> layouts;
  for (int n = lo; n <= hi; ++n) {
    auto blocks = tensor_layout(a, b, n);
    for (const auto& blk : blocks)
      for (std::size_t p = 0; p < blk.dim_a; ++p)
        for (std::size_t q = 0; q < blk.dim_b; ++q)
          basis.add(n, a.basis().labels(blk.left_degree)[p] + "⊗" +
                           b.basis().labels(n - blk.left_degree)[q]);
    layouts.emplace(n, std::move(blocks));
  }

  std::map<int, SparseMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    if (basis.dim(n) == 0 || basis.dim(n - 1) == 0) continue;
    const auto& src = layouts[n];
    const auto& dst = layouts[n - 1];
    auto offset_of = [&](int i) -> std::optional<std::size_t> {
      for (const auto& blk : dst)
        if (blk.left_degree == i) return blk.offset;
      return std::nullopt;
    };
    SparseMatrix::Builder m(field, basis.dim(n - 1), basis.dim(n));
    for (const auto& blk : src) {
      int i = blk.left_degree;
      int j = n - i;
      // da (x) b
      if (auto off = offset_of(i - 1)) {
        SparseMatrix da = a.differential(i);
        std::size_t db_dim = b.dim(j);
        for (std::size_t r = 0; r < da.rows(); ++r)
          for (const auto& e : da.row(r))
            for (std::size_t q = 0; q < db_dim; ++q)
              m.add(*off + r * db_dim + q, blk.offset + e.col * db_dim + q, e.value);
      }
      // (-1)^i a (x) db
      if (auto off = offset_of(i)) {
        SparseMatrix dbm = b.differential(j);
        std::size_t target_b = b.dim(j - 1);
        mpq_class sign = is_odd(i) ? -1 : 1;
        for (std::size_t p = 0; p < blk.dim_a; ++p)
          for (std::size_t r = 0; r < dbm.rows(); ++r)
            for (const auto& e : dbm.row(r))
              m.add(*off + p * target_b + r, blk.offset + p * blk.dim_b + e.col, sign * e.value);
      }
    }
    diffs.emplace(n, std::move(m).build());
  }

  const auto& sa = a.support();
  const auto& sb = b.support();
  auto sat = [](long long v) {
    return static_cast<int>(std::clamp<long long>(v, DegreeRange::kMin, DegreeRange::kMax));
  };
  DegreeRange support{sa.lo <= DegreeRange::kMin || sb.lo <= DegreeRange::kMin
                          ? DegreeRange::kMin
                          : sat((long long)sa.lo + sb.lo),
                      sa.hi >= DegreeRange::kMax || sb.hi >= DegreeRange::kMax
                          ? DegreeRange::kMax
                          : sat((long long)sa.hi + sb.hi)};
  if (complete) return ChainComplex(std::move(basis), std::move(diffs));

  // Longest run of exact degrees inside [lo, hi].
  int best_lo = 0, best_hi = -1, run_lo = lo;
  bool in_run = false;
  for (int n = lo; n <= hi + 1; ++n) {
    bool ok = n <= hi && tensor_degree_exact(a, b, n);
    if (ok && !in_run) {
      run_lo = n;
      in_run = true;
    } else if (!ok && in_run) {
      if (n - 1 - run_lo > best_hi - best_lo) {
        best_lo = run_lo;
        best_hi = n - 1;
      }
      in_run = false;
    }
  }
  // Drop differentials leaving the exact range so the object is self-consistent.
  for (auto it = diffs.begin(); it != diffs.end();) {
    if (it->first <= best_lo || it->first > best_hi)
      it = diffs.erase(it);
    else
      ++it;
  }
  return ChainComplex(std::move(basis), std::move(diffs), DegreeRange{best_lo, best_hi}, support);
}

}  // namespace

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b,
                            const TruncationWindow& window) {
  if (!window.certified) throw WindowError("tensor window is not certified");
  return tensor_impl(a, b, window.lo - 1, window.hi + 1, false);
}

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b) {
  if (!a.bounded() || !b.bounded())
    throw BoundednessError("full tensor product needs bounded complexes");
  auto da = a.basis().degrees();
  auto db = b.basis().degrees();
  if (da.empty() || db.empty()) return ChainComplex(GradedBasis(a.field()), {});
  return tensor_impl(a, b, da.front() + db.front(), da.back() + db.back(), true);
}

long euler_characteristic(const ChainComplex& c) {
  if (!c.bounded()) throw BoundednessError("Euler characteristic of an unbounded complex");
  long chi = 0;
  for (int n : c.basis().degrees()) chi += (is_odd(n) ? -1L : 1L) * static_cast<long>(c.dim(n));
  return chi;
}

}  // namespace kdual
