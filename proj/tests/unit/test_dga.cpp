#include <catch2/catch_amalgamated.hpp>

#include "kdual/dga.hpp"
#include "kdual/errors.hpp"

using namespace kdual;

namespace {

DGAlgebra exterior(FieldSpec f, const std::string& x, int degree) {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  b.add_basis(x, degree);
  b.set_name("exterior");
  return std::move(b).build();
}

// T(u, v) modulo words of length >= 3, generators in degree -2.
DGAlgebra short_tensor_algebra(FieldSpec f) {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  const char* letters[] = {"u", "v"};
  std::size_t gen[2];
  for (int i = 0; i < 2; ++i) gen[i] = b.add_basis(letters[i], -2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::size_t w = b.add_basis(std::string(letters[i]) + letters[j], -4);
      b.add_product(gen[i], gen[j], w, mpq_class(1));
    }
  return std::move(b).build();
}

// 1, e (-2), f (-3) with d e = f: acyclic ideal, noncommutative-free but graded.
DGAlgebra square_zero_with_differential(FieldSpec f) {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  std::size_t e = b.add_basis("e", -2);
  std::size_t g = b.add_basis("f", -3);
  b.add_differential(e, g, mpq_class(1));
  return std::move(b).build();
}

bool has_law(const ValidationReport& r, const std::string& law) {
  for (const auto& v : r.violations)
    if (v.law == law) return true;
  return false;
}

}  // namespace

TEST_CASE("valid algebras pass validation", "[dga]") {
  FieldSpec q;
  CHECK(validate_dga(unit_algebra(q)).ok());
  CHECK(validate_dga(exterior(q, "x", -3)).ok());
  CHECK(validate_dga(short_tensor_algebra(q)).ok());
  CHECK(validate_dga(square_zero_with_differential(q)).ok());
  CHECK(validate_dga(exterior(FieldSpec::prime(2), "x", -3)).ok());
}

TEST_CASE("validation reports the first broken law", "[dga]") {
  FieldSpec q;

  SECTION("differential of the wrong degree") {
    DGAlgebraBuilder b(q, Connectivity::simply_coconnective);
    std::size_t one = b.add_basis("1", 0);
    b.set_unit(one);
    std::size_t x = b.add_basis("x", -3);
    b.add_differential(x, one, mpq_class(1));
    auto r = validate_dga(std::move(b).build());
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().law == "degree");
    CHECK(r.violations.front().witness == "x");
  }

  SECTION("associativity") {
    DGAlgebraBuilder b(q, Connectivity::simply_coconnective);
    b.set_unit(b.add_basis("1", 0));
    std::size_t a = b.add_basis("a", -2);
    std::size_t s = b.add_basis("s", -4);
    std::size_t c = b.add_basis("c", -6);
    b.add_product(a, a, s, mpq_class(1));
    b.add_product(s, a, c, mpq_class(1));
    auto r = validate_dga(std::move(b).build());
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().law == "associativity");
    CHECK(r.violations.front().witness == "a,a,a");
    CHECK(r.violations.front().degree == -6);
  }

  SECTION("Leibniz") {
    DGAlgebraBuilder b(q, Connectivity::simply_coconnective);
    b.set_unit(b.add_basis("1", 0));
    std::size_t x = b.add_basis("x", -2);
    std::size_t z = b.add_basis("z", -4);
    std::size_t w = b.add_basis("w", -5);
    b.add_product(x, x, z, mpq_class(1));
    b.add_differential(z, w, mpq_class(1));
    auto r = validate_dga(std::move(b).build());
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().law == "leibniz");
    CHECK(r.violations.front().witness == "x,x");
  }

  SECTION("d squared") {
    DGAlgebraBuilder b(q, Connectivity::simply_coconnective);
    b.set_unit(b.add_basis("1", 0));
    std::size_t x = b.add_basis("x", -2);
    std::size_t y = b.add_basis("y", -3);
    std::size_t z = b.add_basis("z", -4);
    b.add_differential(x, y, mpq_class(1));
    b.add_differential(y, z, mpq_class(1));
    auto r = validate_dga(std::move(b).build());
    CHECK(has_law(r, "d_squared"));
  }

  SECTION("unit axioms") {
    DGAlgebraBuilder b(q, Connectivity::simply_coconnective);
    std::size_t one = b.add_basis("1", 0);
    b.set_unit(one);
    std::size_t x = b.add_basis("x", -2);
    b.add_product(one, x, x, mpq_class(2));
    auto r = validate_dga(std::move(b).build());
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().law == "unit");
  }

  SECTION("connectivity") {
    auto r = validate_dga(exterior(q, "t", -1));
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().law == "connectivity");

    DGAlgebraBuilder b(q, Connectivity::connective);
    b.set_unit(b.add_basis("1", 0));
    b.add_basis("x", -2);
    CHECK(has_law(validate_dga(std::move(b).build()), "connectivity"));

    DGAlgebraBuilder c(q, Connectivity::connective);
    c.set_unit(c.add_basis("1", 0));
    c.add_basis("e", 0);
    CHECK(has_law(validate_dga(std::move(c).build()), "connectivity"));
  }

  SECTION("augmentation") {
    DGAlgebraBuilder b(q, Connectivity::connective);
    std::size_t one = b.add_basis("1", 0);
    b.set_unit(one);
    std::size_t x = b.add_basis("x", 1);
    b.add_differential(x, one, mpq_class(1));
    CHECK(has_law(validate_dga(std::move(b).build()), "augmentation"));
  }
}

TEST_CASE("builder rejects malformed input", "[dga]") {
  DGAlgebraBuilder b(FieldSpec{}, Connectivity::connective);
  b.add_basis("x", 2);
  CHECK_THROWS_AS(b.add_basis("x", 3), LookupError);
  CHECK_THROWS_AS(std::move(b).build(), LookupError);
}

TEST_CASE("opposite algebras", "[dga][opposite]") {
  FieldSpec q;
  auto ext = exterior(q, "x", -3);
  CHECK(opposite_dga(ext) == ext);

  auto t = short_tensor_algebra(q);
  auto op = opposite_dga(t);
  CHECK(validate_dga(op).ok());
  CHECK(opposite_dga(op) == t);
  CHECK_FALSE(op == t);
  // u *' v = (-1)^{4} v * u = vu
  auto u = *t.find("u"), v = *t.find("v");
  REQUIRE(op.product(u, v).size() == 1);
  CHECK(op.label(op.product(u, v).front().index) == "vu");

  // Square-zero on two degree -2 generators is its own opposite.
  DGAlgebraBuilder sb(q, Connectivity::simply_coconnective);
  sb.set_unit(sb.add_basis("1", 0));
  sb.add_basis("e1", -2);
  sb.add_basis("e2", -2);
  auto sq = std::move(sb).build();
  CHECK(opposite_dga(sq) == sq);

  // Odd generators pick up a sign.
  DGAlgebraBuilder ob(q, Connectivity::connective);
  ob.set_unit(ob.add_basis("1", 0));
  std::size_t a = ob.add_basis("a", 1);
  std::size_t b = ob.add_basis("b", 1);
  std::size_t ab = ob.add_basis("ab", 2);
  ob.add_product(a, b, ab, mpq_class(1));
  auto odd = std::move(ob).build();
  auto odd_op = opposite_dga(odd);
  REQUIRE(odd_op.product(b, a).size() == 1);
  CHECK(odd_op.product(b, a).front().coeff == Scalar(q, -1L));
  CHECK(odd_op.product(a, b).empty());
}

TEST_CASE("tensor products of algebras", "[dga][tensor]") {
  FieldSpec q;
  auto w = TruncationWindow::exact(-20, 0);
  auto lx = exterior(q, "x", -3);
  auto lw = exterior(q, "w", -5);
  auto t = tensor_dga(lx, lw, w);
  CHECK(validate_dga(t).ok());
  CHECK(t.size() == 4);
  auto h = homology_dimensions(underlying_complex(t), TruncationWindow::exact(-10, 1));
  for (int n = -10; n <= 1; ++n) {
    bool expected = n == 0 || n == -3 || n == -5 || n == -8;
    CHECK(h.at(n) == (expected ? 1u : 0u));
  }
  // (x (x) 1)(1 (x) w) = x (x) w, (1 (x) w)(x (x) 1) = (-1)^{15} x (x) w
  auto x1 = *t.find("x⊗1"), w1 = *t.find("1⊗w"), xw = *t.find("x⊗w");
  CHECK(t.product(x1, w1) == LinearCombination{{xw, Scalar(q, 1L)}});
  CHECK(t.product(w1, x1) == LinearCombination{{xw, Scalar(q, -1L)}});

  auto with_unit = tensor_dga(lx, unit_algebra(q), w);
  CHECK(with_unit.size() == lx.size());
  CHECK(validate_dga(with_unit).ok());

  auto d = tensor_dga(square_zero_with_differential(q), short_tensor_algebra(q), w);
  CHECK(validate_dga(d).ok());
  CHECK(d.size() == 3 * 7);

  CHECK_THROWS_AS(tensor_dga(lx, exterior(FieldSpec::prime(2), "w", -5), w), FieldError);
}

TEST_CASE("underlying complexes", "[dga]") {
  FieldSpec q;
  auto k = underlying_complex(unit_algebra(q));
  CHECK(k.basis().total_dimension() == 1);
  CHECK(k.dim(0) == 1);

  auto c = underlying_complex(exterior(q, "x", -3));
  CHECK(c.dim(0) == 1);
  CHECK(c.dim(-3) == 1);
  CHECK(c.differentials().empty());

  auto s = square_zero_with_differential(q);
  auto sc = underlying_complex(s);
  CHECK(validate_complex(sc).ok());
  CHECK(sc.differential(-2).at(0, 0) == Scalar(q, 1L));
  auto h = homology_dimensions(sc, TruncationWindow::exact(-4, 1));
  CHECK(h.at(0) == 1);
  CHECK(h.at(-2) == 0);
  CHECK(h.at(-3) == 0);
}

TEST_CASE("truncated algebras without a recipe cannot grow", "[dga]") {
  DGAlgebraBuilder b(FieldSpec{}, Connectivity::connective);
  b.set_unit(b.add_basis("1", 0));
  b.add_basis("y", 2);
  b.set_exact_range({DegreeRange::kMin, 3});
  auto a = std::move(b).build();
  CHECK_FALSE(a.complete());
  CHECK_NOTHROW(a.covering({0, 3}));
  CHECK_THROWS_AS(a.covering({0, 4}), WindowError);
}
