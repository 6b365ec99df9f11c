#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kdual/chain_complex.hpp"
#include "kdual/field.hpp"
#include "kdual/graded.hpp"
#include "kdual/validation.hpp"

namespace kdual {

struct Term {
  std::size_t index;
  Scalar coeff;

  bool operator==(const Term&) const = default;
};

/// Formal combination of basis indices: sorted by index, no zero coefficients.
using LinearCombination = std::vector<Term>;

/// Sums coefficients per index and emits a LinearCombination.
class CombinationBuilder {
 public:
  explicit CombinationBuilder(FieldSpec field) : field_(field) {}
  void add(std::size_t index, const mpq_class& coeff);
  void add(std::size_t index, const Scalar& coeff) { add(index, coeff.value()); }
  void add_scaled(const LinearCombination& combo, const mpq_class& factor);
  LinearCombination build() const;

 private:
  FieldSpec field_;
  std::map<std::size_t, mpq_class> acc_;
};

enum class Connectivity { connective, simply_coconnective };

std::string to_string(Connectivity c);
/// "connective" or "simply_coconnective"; throws ParseError otherwise.
Connectivity parse_connectivity(std::string_view text);
Connectivity flipped(Connectivity c);
/// Degrees an algebra of this class can occupy.
DegreeRange support_of(Connectivity c);

struct BasisElement {
  std::string label;
  int degree;

  bool operator==(const BasisElement&) const = default;
};

class DGAlgebra;

/// Regenerates an algebra that is exact on (at least) the requested degrees.
using AlgebraRecipe = std::function<DGAlgebra(const DegreeRange&)>;

/// Augmented DGA on a homogeneous basis adapted to the augmentation: a unit
/// in degree 0 plus a basis of the augmentation ideal. Products and the
/// differential are structure constants on that basis.
///
/// An algebra can be a truncation of an infinite one. `exact_range` [L, U]
/// then means basis and products are complete in degrees [L, U] and the
/// differential is complete on sources of degree [L+1, U]; products landing
/// outside are dropped. A recipe, when present, rebuilds the algebra on a
/// larger range.
class DGAlgebra {
 public:
  const FieldSpec& field() const noexcept { return field_; }
  Connectivity connectivity() const noexcept { return connectivity_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  std::size_t unit() const noexcept { return unit_; }
  bool is_unit(std::size_t i) const noexcept { return i == unit_; }
  std::optional<std::size_t> find(const std::string& label) const;
  /// Indices of the augmentation ideal basis, in basis order.
  std::vector<std::size_t> ideal() const;
  /// Basis indices in degree n, in basis order.
  const std::vector<std::size_t>& in_degree(int n) const;
  /// Position of basis element i within its degree.
  std::size_t position_in_degree(std::size_t i) const { return position_[i]; }
  std::vector<int> degrees() const;

  /// Structure constants of basis_i * basis_j (empty when zero).
  const LinearCombination& product(std::size_t i, std::size_t j) const;
  const LinearCombination& differential(std::size_t i) const { return differential_[i]; }
  /// All nonzero products, keyed by (i << 32) | j.
  const std::unordered_map<std::uint64_t, LinearCombination>& products() const noexcept {
    return products_;
  }

  LinearCombination multiply(const LinearCombination& a, const LinearCombination& b) const;
  LinearCombination apply_differential(const LinearCombination& a) const;

  /// nullopt when the algebra is complete (finite-dimensional, nothing truncated).
  const std::optional<DegreeRange>& exact_range() const noexcept { return exact_; }
  bool complete() const noexcept { return !exact_; }
  /// Complete and without a recipe: the whole algebra is this finite basis.
  bool finite_total_dimension() const noexcept { return !exact_ && !recipe_; }
  bool expandable() const noexcept { return static_cast<bool>(recipe_); }
  const std::shared_ptr<const AlgebraRecipe>& recipe() const noexcept { return recipe_; }
  /// Number of products dropped because they left the exact range.
  std::size_t dropped_products() const noexcept { return dropped_; }

  /// Exact on `needed`: *this when it already is, otherwise regenerated from
  /// the recipe. Throws WindowError when neither is possible.
  DGAlgebra covering(const DegreeRange& needed) const;
  /// Degrees this algebra is known exactly on (support clipped to exact range).
  DegreeRange known_range() const;

  DGAlgebra renamed(std::string name) const;

  /// Field, basis, unit and structure constants agree (connectivity,
  /// truncation and name are metadata).
  bool same_structure(const DGAlgebra& other) const;
  bool operator==(const DGAlgebra& other) const { return same_structure(other); }

 private:
  friend class DGAlgebraBuilder;

  FieldSpec field_;
  Connectivity connectivity_ = Connectivity::simply_coconnective;
  std::string name_;
  std::vector<BasisElement> basis_;
  std::size_t unit_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<int, std::vector<std::size_t>> by_degree_;
  std::vector<std::size_t> position_;
  std::unordered_map<std::uint64_t, LinearCombination> products_;
  std::vector<LinearCombination> differential_;
  std::optional<DegreeRange> exact_;
  std::shared_ptr<const AlgebraRecipe> recipe_;
  std::size_t dropped_ = 0;
};

/// Assembles a DGAlgebra. Unit products default to 1*a = a*1 = a unless set
/// explicitly; every other unlisted product or differential is zero.
class DGAlgebraBuilder {
 public:
  DGAlgebraBuilder(FieldSpec field, Connectivity connectivity);

  /// Throws LookupError on a duplicate label.
  std::size_t add_basis(std::string label, int degree);
  void set_unit(std::size_t index) { unit_ = index; }
  /// Adds coeff * basis_k to basis_i * basis_j.
  void add_product(std::size_t i, std::size_t j, std::size_t k, const mpq_class& coeff);
  void add_product(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff) {
    add_product(i, j, k, coeff.value());
  }
  void add_differential(std::size_t i, std::size_t k, const mpq_class& coeff);
  void add_differential(std::size_t i, std::size_t k, const Scalar& coeff) {
    add_differential(i, k, coeff.value());
  }
  void set_exact_range(DegreeRange range) { exact_ = range; }
  void set_recipe(AlgebraRecipe recipe);
  void set_recipe(std::shared_ptr<const AlgebraRecipe> recipe) { recipe_ = std::move(recipe); }
  void set_dropped_products(std::size_t n) { dropped_ = n; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::optional<std::size_t> find(const std::string& label) const;
  const FieldSpec& field() const noexcept { return field_; }

  /// Does not validate; see validate_dga.
  DGAlgebra build() &&;

 private:
  FieldSpec field_;
  Connectivity connectivity_;
  std::string name_;
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<std::size_t> unit_;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, mpq_class>> products_;
  std::map<std::size_t, std::map<std::size_t, mpq_class>> differential_;
  std::optional<DegreeRange> exact_;
  std::shared_ptr<const AlgebraRecipe> recipe_;
  std::size_t dropped_ = 0;
};

/// Checks unit axioms, homogeneity, associativity, the Leibniz rule, d^2 = 0,
/// the connectivity class and augmentation adaptedness, exactly. Truncated
/// algebras are checked on triples and pairs that stay inside the exact range.
ValidationReport validate_dga(const DGAlgebra& a);

/// Graded opposite: a *' b = (-1)^{|a||b|} b * a. Same basis and differential.
DGAlgebra opposite_dga(const DGAlgebra& a);

/// A (x) B with (a1 (x) b1)(a2 (x) b2) = (-1)^{|b1||a2|} a1a2 (x) b1b2 and the
/// Leibniz differential. Truncated or recipe-backed factors are expanded to
/// cover the window widened by 2. Throws FieldError on mixed fields and
/// WindowError when the connectivity classes are incompatible.
DGAlgebra tensor_dga(const DGAlgebra& a, const DGAlgebra& b, const TruncationWindow& window);

/// The underlying chain complex (product forgotten).
ChainComplex underlying_complex(const DGAlgebra& a);

/// The ground field k as a one-element algebra.
DGAlgebra unit_algebra(FieldSpec field, Connectivity connectivity = Connectivity::simply_coconnective);

}  // namespace kdual
