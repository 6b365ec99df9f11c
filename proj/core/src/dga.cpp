#include "kdual/dga.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "kdual/errors.hpp"

namespace kdual {

namespace {

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

const LinearCombination& empty_combination() {
  static const LinearCombination empty;
  return empty;
}

LinearCombination from_map(const FieldSpec& field, const std::map<std::size_t, mpq_class>& m) {
  LinearCombination out;
  for (const auto& [index, value] : m) {
    mpq_class v = field.normalize(value);
    if (sgn(v) != 0) out.push_back({index, Scalar(field, v)});
  }
  return out;
}

}  // namespace

void CombinationBuilder::add(std::size_t index, const mpq_class& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = acc_.try_emplace(index, coeff);
  if (!inserted) it->second += coeff;
}

void CombinationBuilder::add_scaled(const LinearCombination& combo, const mpq_class& factor) {
  for (const auto& t : combo) add(t.index, t.coeff.value() * factor);
}

LinearCombination CombinationBuilder::build() const { return from_map(field_, acc_); }

std::string to_string(Connectivity c) {
  return c == Connectivity::connective ? "connective" : "simply_coconnective";
}

Connectivity parse_connectivity(std::string_view text) {
  if (text == "connective") return Connectivity::connective;
  if (text == "simply_coconnective") return Connectivity::simply_coconnective;
  throw ParseError("unknown connectivity '" + std::string(text) +
                   "' (expected connective or simply_coconnective)");
}

Connectivity flipped(Connectivity c) {
  return c == Connectivity::connective ? Connectivity::simply_coconnective
                                       : Connectivity::connective;
}

DegreeRange support_of(Connectivity c) {
  return c == Connectivity::connective ? DegreeRange::nonnegative() : DegreeRange::nonpositive();
}

std::optional<std::size_t> DGAlgebra::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> DGAlgebra::ideal() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (i != unit_) out.push_back(i);
  return out;
}

const std::vector<std::size_t>& DGAlgebra::in_degree(int n) const {
  static const std::vector<std::size_t> none;
  auto it = by_degree_.find(n);
  return it == by_degree_.end() ? none : it->second;
}

std::vector<int> DGAlgebra::degrees() const {
  std::vector<int> out;
  for (const auto& [n, _] : by_degree_) out.push_back(n);
  return out;
}

const LinearCombination& DGAlgebra::product(std::size_t i, std::size_t j) const {
  auto it = products_.find(pair_key(i, j));
  return it == products_.end() ? empty_combination() : it->second;
}

LinearCombination DGAlgebra::multiply(const LinearCombination& a,
                                      const LinearCombination& b) const {
  CombinationBuilder acc(field_);
  for (const auto& x : a) {
    for (const auto& y : b) {
      const auto& p = product(x.index, y.index);
      if (!p.empty()) acc.add_scaled(p, x.coeff.value() * y.coeff.value());
    }
  }
  return acc.build();
}

LinearCombination DGAlgebra::apply_differential(const LinearCombination& a) const {
  CombinationBuilder acc(field_);
  for (const auto& x : a) acc.add_scaled(differential_[x.index], x.coeff.value());
  return acc.build();
}

DegreeRange DGAlgebra::known_range() const {
  DegreeRange s = support_of(connectivity_);
  return exact_ ? s.intersect(*exact_) : s;
}

DGAlgebra DGAlgebra::covering(const DegreeRange& needed) const {
  DegreeRange want = needed.intersect(support_of(connectivity_));
  if (!exact_ || exact_->contains(want)) return *this;
  if (recipe_) {
    DGAlgebra out = (*recipe_)(needed);
    if (out.exact_ && !out.exact_->contains(want))
      throw WindowError("expansion of " + name_ + " does not cover " + to_string(needed));
    return out;
  }
  throw WindowError("algebra " + name_ + " is only known on " + to_string(*exact_) +
                    " and cannot be expanded to " + to_string(needed));
}

DGAlgebra DGAlgebra::renamed(std::string name) const {
  DGAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

bool DGAlgebra::same_structure(const DGAlgebra& other) const {
  return field_ == other.field_ && basis_ == other.basis_ && unit_ == other.unit_ &&
         products_ == other.products_ && differential_ == other.differential_;
}

DGAlgebraBuilder::DGAlgebraBuilder(FieldSpec field, Connectivity connectivity)
    : field_(field), connectivity_(connectivity) {}

std::size_t DGAlgebraBuilder::add_basis(std::string label, int degree) {
  if (index_.count(label)) throw LookupError("duplicate basis label '" + label + "'");
  std::size_t i = basis_.size();
  index_.emplace(label, i);
  basis_.push_back({std::move(label), degree});
  return i;
}

std::optional<std::size_t> DGAlgebraBuilder::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void DGAlgebraBuilder::add_product(std::size_t i, std::size_t j, std::size_t k,
                                   const mpq_class& coeff) {
  auto& slot = products_[{i, j}][k];
  slot += coeff;
}

void DGAlgebraBuilder::add_differential(std::size_t i, std::size_t k, const mpq_class& coeff) {
  differential_[i][k] += coeff;
}

void DGAlgebraBuilder::set_recipe(AlgebraRecipe recipe) {
  recipe_ = std::make_shared<const AlgebraRecipe>(std::move(recipe));
}

DGAlgebra DGAlgebraBuilder::build() && {
  if (!unit_) throw LookupError("algebra has no unit");
  if (*unit_ >= basis_.size()) throw LookupError("unit index out of range");
  const std::size_t n = basis_.size();
  const std::size_t u = *unit_;
  for (const auto& [ij, terms] : products_)
    for (const auto& [k, _] : terms)
      if (ij.first >= n || ij.second >= n || k >= n)
        throw LookupError("product refers to an unknown basis index");
  for (const auto& [i, terms] : differential_)
    for (const auto& [k, _] : terms)
      if (i >= n || k >= n) throw LookupError("differential refers to an unknown basis index");

  // Unit products default to the identity unless given explicitly.
  for (std::size_t j = 0; j < n; ++j) {
    if (!products_.count({u, j})) products_[{u, j}][j] = 1;
    if (!products_.count({j, u})) products_[{j, u}][j] = 1;
  }

  DGAlgebra a;
  a.field_ = field_;
  a.connectivity_ = connectivity_;
  a.name_ = std::move(name_);
  a.basis_ = std::move(basis_);
  a.unit_ = u;
  a.index_ = std::move(index_);
  a.position_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& slot = a.by_degree_[a.basis_[i].degree];
    a.position_[i] = slot.size();
    slot.push_back(i);
  }
  for (const auto& [ij, terms] : products_) {
    LinearCombination combo = from_map(field_, terms);
    if (!combo.empty()) a.products_.emplace(pair_key(ij.first, ij.second), std::move(combo));
  }
  a.differential_.resize(n);
  for (const auto& [i, terms] : differential_) a.differential_[i] = from_map(field_, terms);
  a.exact_ = exact_;
  a.recipe_ = std::move(recipe_);
  a.dropped_ = dropped_;
  return a;
}

namespace {

constexpr std::size_t kMaxViolations = 64;

class Collector {
 public:
  explicit Collector(const DGAlgebra& a) : a_(a) {}

  void add(std::string law, int degree, std::initializer_list<std::size_t> witnesses,
           std::string message) {
    if (report.violations.size() >= kMaxViolations) return;
    std::string w;
    for (std::size_t i : witnesses) {
      if (!w.empty()) w += ',';
      w += a_.label(i);
    }
    report.violations.push_back({std::move(law), degree, std::move(w), std::move(message)});
  }
  bool full() const { return report.violations.size() >= kMaxViolations; }

  ValidationReport report;

 private:
  const DGAlgebra& a_;
};

std::string render(const DGAlgebra& a, const LinearCombination& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : c) {
    if (!first) os << " + ";
    first = false;
    if (!t.coeff.is_one()) os << t.coeff << "*";
    os << a.label(t.index);
  }
  return os.str();
}

LinearCombination basis_vector(const DGAlgebra& a, std::size_t i) {
  return {{i, Scalar::one(a.field())}};
}

LinearCombination combine(const FieldSpec& field, const LinearCombination& x,
                          const LinearCombination& y, const mpq_class& y_factor) {
  CombinationBuilder acc(field);
  acc.add_scaled(x, 1);
  acc.add_scaled(y, y_factor);
  return acc.build();
}

}  // namespace

ValidationReport validate_dga(const DGAlgebra& a) {
  Collector out(a);
  const std::size_t n = a.size();
  const std::size_t u = a.unit();
  const DegreeRange exact = a.exact_range().value_or(DegreeRange::all());
  const DegreeRange d_exact{exact.lo + 1, exact.hi};

  // Homogeneity of structure constants.
  for (const auto& [key, combo] : a.products()) {
    std::size_t i = key >> 32, j = key & 0xffffffffu;
    int target = a.degree(i) + a.degree(j);
    for (const auto& t : combo)
      if (a.degree(t.index) != target)
        out.add("degree", target, {i, j},
                "product lands in degree " + std::to_string(a.degree(t.index)) + " (term " +
                    a.label(t.index) + ")");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : a.differential(i))
      if (a.degree(t.index) != a.degree(i) - 1)
        out.add("degree", a.degree(i), {i},
                "d(" + a.label(i) + ") contains " + a.label(t.index) + " of degree " +
                    std::to_string(a.degree(t.index)) + ", expected " +
                    std::to_string(a.degree(i) - 1));

  // Unit axioms.
  if (a.degree(u) != 0) out.add("unit", a.degree(u), {u}, "unit is not in degree 0");
  for (std::size_t j = 0; j < n; ++j) {
    LinearCombination e = basis_vector(a, j);
    if (a.product(u, j) != e)
      out.add("unit", a.degree(j), {u, j}, "1*" + a.label(j) + " = " + render(a, a.product(u, j)));
    if (a.product(j, u) != e)
      out.add("unit", a.degree(j), {j, u}, a.label(j) + "*1 = " + render(a, a.product(j, u)));
  }
  if (!a.differential(u).empty())
    out.add("unit", 0, {u}, "d(1) = " + render(a, a.differential(u)));

  // Connectivity class.
  for (std::size_t i = 0; i < n; ++i) {
    if (i == u) continue;
    int deg = a.degree(i);
    if (deg == 0) {
      out.add("connectivity", 0, {i}, "degree 0 must be spanned by the unit");
    } else if (a.connectivity() == Connectivity::connective && deg < 0) {
      out.add("connectivity", deg, {i}, "connective algebra has an element of negative degree");
    } else if (a.connectivity() == Connectivity::simply_coconnective && deg > 0) {
      out.add("connectivity", deg, {i},
              "simply coconnective algebra has an element of positive degree");
    } else if (a.connectivity() == Connectivity::simply_coconnective && deg == -1) {
      out.add("connectivity", -1, {i}, "simply coconnective algebra has an element of degree -1");
    }
  }

  // Augmentation adaptedness: the ideal is closed under product and d.
  for (std::size_t i = 0; i < n; ++i) {
    if (i == u) continue;
    for (const auto& t : a.differential(i))
      if (t.index == u) out.add("augmentation", a.degree(i), {i}, "d hits the unit");
  }
  for (const auto& [key, combo] : a.products()) {
    std::size_t i = key >> 32, j = key & 0xffffffffu;
    if (i == u || j == u) continue;
    for (const auto& t : combo)
      if (t.index == u)
        out.add("augmentation", a.degree(i) + a.degree(j), {i, j},
                "product of ideal elements has a unit component");
  }
  if (out.full()) return out.report;

  const std::vector<std::size_t> ideal = a.ideal();

  // d^2 = 0 where the differential is known twice over.
  for (std::size_t i : ideal) {
    if (a.degree(i) - 1 < d_exact.lo || !d_exact.contains(a.degree(i))) continue;
    LinearCombination dd = a.apply_differential(a.differential(i));
    if (!dd.empty())
      out.add("d_squared", a.degree(i), {i}, "d(d(" + a.label(i) + ")) = " + render(a, dd));
  }

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i : ideal) by_degree[a.degree(i)].push_back(i);

  // Leibniz rule on pairs whose product degree has a known differential.
  for (const auto& [deg_i, is] : by_degree)
    for (const auto& [deg_j, js] : by_degree) {
      const int deg = deg_i + deg_j;
      if (!d_exact.contains(deg)) continue;
      const mpq_class sign = is_odd(deg_i) ? -1 : 1;
      for (std::size_t i : is)
        for (std::size_t j : js) {
          LinearCombination lhs = a.apply_differential(a.product(i, j));
          LinearCombination rhs = combine(a.field(), a.multiply(a.differential(i), basis_vector(a, j)),
                                          a.multiply(basis_vector(a, i), a.differential(j)), sign);
          if (lhs != rhs) {
            out.add("leibniz", deg, {i, j},
                    "d(" + a.label(i) + "*" + a.label(j) + ") = " + render(a, lhs) +
                        " but the Leibniz rule gives " + render(a, rhs));
            if (out.full()) return out.report;
          }
        }
    }

  // Associativity on triples inside the exact range.
  for (const auto& [deg_i, is] : by_degree)
    for (const auto& [deg_j, js] : by_degree)
      for (const auto& [deg_k, ks] : by_degree) {
        const int deg = deg_i + deg_j + deg_k;
        if (!exact.contains(deg)) continue;
        for (std::size_t i : is)
          for (std::size_t j : js) {
            const auto& pij = a.product(i, j);
            for (std::size_t k : ks) {
              const auto& pjk = a.product(j, k);
              if (pij.empty() && pjk.empty()) continue;
              LinearCombination left = a.multiply(pij, basis_vector(a, k));
              LinearCombination right = a.multiply(basis_vector(a, i), pjk);
              if (left != right) {
                out.add("associativity", deg, {i, j, k},
                        "(ab)c = " + render(a, left) + " but a(bc) = " + render(a, right));
                if (out.full()) return out.report;
              }
            }
          }
      }
  return out.report;
}

DGAlgebra opposite_dga(const DGAlgebra& a) {
  DGAlgebraBuilder b(a.field(), a.connectivity());
  for (const auto& e : a.basis()) b.add_basis(e.label, e.degree);
  b.set_unit(a.unit());
  for (const auto& [key, combo] : a.products()) {
    std::size_t i = key >> 32, j = key & 0xffffffffu;
    mpq_class sign = is_odd(static_cast<long>(a.degree(i)) * a.degree(j)) ? -1 : 1;
    for (const auto& t : combo) b.add_product(j, i, t.index, t.coeff.value() * sign);
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& t : a.differential(i)) b.add_differential(i, t.index, t.coeff);
  if (a.exact_range()) b.set_exact_range(*a.exact_range());
  b.set_dropped_products(a.dropped_products());
  const std::string& name = a.name();
  if (name.size() > 4 && name.rfind("op(", 0) == 0 && name.back() == ')')
    b.set_name(name.substr(3, name.size() - 4));
  else
    b.set_name("op(" + name + ")");
  if (a.recipe()) {
    auto inner = a.recipe();
    b.set_recipe([inner](const DegreeRange& r) { return opposite_dga((*inner)(r)); });
  }
  return std::move(b).build();
}

namespace {

DGAlgebra tensor_covering(const DGAlgebra& a, const DGAlgebra& b, const DegreeRange& needed) {
  if (!(a.field() == b.field()))
    throw FieldError("tensor product of algebras over " + a.field().name() + " and " +
                     b.field().name());
  const bool a_trivial = a.size() == 1, b_trivial = b.size() == 1;
  Connectivity conn = a.connectivity();
  if (a_trivial && !b_trivial) {
    conn = b.connectivity();
  } else if (!a_trivial && !b_trivial && a.connectivity() != b.connectivity()) {
    throw WindowError("tensor product of a connective and a simply coconnective algebra has "
                      "no certifiable window");
  }

  const DGAlgebra ea = a.covering(needed);
  const DGAlgebra eb = b.covering(needed);
  const DegreeRange ka = ea.known_range(), kb = eb.known_range();
  std::optional<DegreeRange> exact;
  if (!ea.complete() || !eb.complete()) {
    if (conn == Connectivity::connective)
      exact = DegreeRange{0, std::min(ka.hi, kb.hi)};
    else
      exact = DegreeRange{std::max(ka.lo, kb.lo), 0};
  }
  const DegreeRange keep = exact.value_or(DegreeRange::all());

  DGAlgebraBuilder t(a.field(), conn);
  std::vector<std::vector<std::optional<std::size_t>>> index(
      ea.size(), std::vector<std::optional<std::size_t>>(eb.size()));
  for (std::size_t i = 0; i < ea.size(); ++i)
    for (std::size_t j = 0; j < eb.size(); ++j) {
      int deg = ea.degree(i) + eb.degree(j);
      if (!keep.contains(deg)) continue;
      index[i][j] = t.add_basis(ea.label(i) + "⊗" + eb.label(j), deg);
    }
  t.set_unit(*index[ea.unit()][eb.unit()]);

  std::size_t dropped = 0;
  for (std::size_t i1 = 0; i1 < ea.size(); ++i1)
    for (std::size_t j1 = 0; j1 < eb.size(); ++j1) {
      if (!index[i1][j1]) continue;
      const std::size_t left = *index[i1][j1];
      for (std::size_t i2 = 0; i2 < ea.size(); ++i2) {
        const auto& pa = ea.product(i1, i2);
        if (pa.empty()) continue;
        for (std::size_t j2 = 0; j2 < eb.size(); ++j2) {
          if (!index[i2][j2]) continue;
          const auto& pb = eb.product(j1, j2);
          if (pb.empty()) continue;
          const std::size_t right = *index[i2][j2];
          mpq_class sign = is_odd(static_cast<long>(eb.degree(j1)) * ea.degree(i2)) ? -1 : 1;
          for (const auto& x : pa)
            for (const auto& y : pb) {
              if (!index[x.index][y.index]) {
                ++dropped;
                continue;
              }
              t.add_product(left, right, *index[x.index][y.index],
                            sign * x.coeff.value() * y.coeff.value());
            }
        }
      }
      // d(a (x) b) = da (x) b + (-1)^|a| a (x) db
      mpq_class sign = is_odd(ea.degree(i1)) ? -1 : 1;
      for (const auto& x : ea.differential(i1))
        if (index[x.index][j1]) t.add_differential(left, *index[x.index][j1], x.coeff.value());
      for (const auto& y : eb.differential(j1))
        if (index[i1][y.index])
          t.add_differential(left, *index[i1][y.index], sign * y.coeff.value());
    }

  if (exact) t.set_exact_range(*exact);
  t.set_dropped_products(dropped + ea.dropped_products() + eb.dropped_products());
  t.set_name(a.name() + "⊗" + b.name());
  if (a.expandable() || b.expandable()) {
    t.set_recipe([a, b](const DegreeRange& r) { return tensor_covering(a, b, r); });
  }
  return std::move(t).build();
}

}  // namespace

DGAlgebra tensor_dga(const DGAlgebra& a, const DGAlgebra& b, const TruncationWindow& window) {
  return tensor_covering(a, b, window.range().widened(2));
}

ChainComplex underlying_complex(const DGAlgebra& a) {
  GradedBasis basis(a.field());
  for (const auto& e : a.basis()) basis.add(e.degree, e.label);
  std::map<int, SparseMatrix> diffs;
  for (int n : a.degrees()) {
    const auto& sources = a.in_degree(n);
    const auto& targets = a.in_degree(n - 1);
    if (targets.empty()) continue;
    SparseMatrix::Builder m(a.field(), targets.size(), sources.size());
    bool any = false;
    for (std::size_t c = 0; c < sources.size(); ++c)
      for (const auto& t : a.differential(sources[c])) {
        m.add(a.position_in_degree(t.index), c, t.coeff);
        any = true;
      }
    if (any) diffs.emplace(n, std::move(m).build());
  }
  if (a.finite_total_dimension())
    return ChainComplex(std::move(basis), std::move(diffs));
  return ChainComplex(std::move(basis), std::move(diffs), a.exact_range(),
                      support_of(a.connectivity()));
}

DGAlgebra unit_algebra(FieldSpec field, Connectivity connectivity) {
  DGAlgebraBuilder b(field, connectivity);
  b.set_unit(b.add_basis("1", 0));
  b.set_name("unit");
  return std::move(b).build();
}

}  // namespace kdual
