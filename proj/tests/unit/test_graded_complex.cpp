#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kdual/chain_complex.hpp"
#include "kdual/errors.hpp"
#include "kdual/linear.hpp"
#include "test_helpers.hpp"

using namespace kdual;
using kdual::testing::identity_pair;
using kdual::testing::random_complex;

namespace {

ChainComplex single(const FieldSpec& f, int degree) {
  GradedBasis b(f);
  b.add(degree, "g");
  return ChainComplex(std::move(b), {});
}

// dim H_n computed directly from ranks, independent of homology_dimensions.
std::size_t betti_direct(const ChainComplex& c, int n) {
  return c.dim(n) - rank(c.differential(n)) - rank(c.differential(n + 1));
}

}  // namespace

TEST_CASE("graded bases", "[graded]") {
  GradedBasis b;
  b.add(2, "x");
  b.add(2, "y");
  b.add(-1, "z");
  CHECK(b.dim(2) == 2);
  CHECK(b.dim(0) == 0);
  CHECK(b.index_of(2, "y") == 1u);
  CHECK_FALSE(b.index_of(-1, "x"));
  CHECK(b.degrees() == std::vector<int>{-1, 2});
  CHECK(b.total_dimension() == 3);
  CHECK_THROWS_AS(b.add(2, "x"), LookupError);
  b.add(3, "x");  // labels need only be unique within a degree
}

TEST_CASE("degree ranges saturate", "[graded]") {
  CHECK(DegreeRange::all().widened(3) == DegreeRange::all());
  CHECK(DegreeRange{-2, 5}.widened(1) == DegreeRange{-3, 6});
  CHECK(DegreeRange{-2, 5}.negated() == DegreeRange{-5, 2});
  CHECK(DegreeRange::nonnegative().negated() == DegreeRange::nonpositive());
  CHECK(to_string(DegreeRange{DegreeRange::kMin, 4}) == "[-inf,4]");
}

TEST_CASE("validate_complex", "[complex]") {
  FieldSpec q;
  CHECK(validate_complex(single(q, 0)).ok());
  CHECK(validate_complex(identity_pair(q, 1)).ok());

  GradedBasis b(q);
  for (int n = 0; n < 3; ++n) b.add(n, "e" + std::to_string(n));
  std::map<int, SparseMatrix> d;
  d.emplace(1, SparseMatrix::identity(q, 1));
  d.emplace(2, SparseMatrix::identity(q, 1));
  auto report = validate_complex(ChainComplex(b, d));
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().law == "d_squared");
  CHECK(report.violations.front().degree == 2);
  CHECK(report.violations.front().witness == "e2");

  std::map<int, SparseMatrix> bad;
  bad.emplace(1, SparseMatrix::identity(q, 2));
  auto shape = validate_complex(ChainComplex(b, bad));
  REQUIRE_FALSE(shape.ok());
  CHECK(shape.violations.front().law == "shape");
}

TEST_CASE("homology dimensions", "[complex]") {
  FieldSpec q;
  auto w = TruncationWindow::exact(-3, 3);
  auto zero = homology_dimensions(ChainComplex(GradedBasis(q), {}), w);
  for (const auto& [n, dim] : zero.entries()) CHECK(dim == 0);
  CHECK(zero.entries().size() == 7);

  auto h = homology_dimensions(single(q, 0), w);
  CHECK(h.at(0) == 1);
  CHECK(h.at(1) == 0);
  CHECK(h.at(-1) == 0);
  CHECK_THROWS_AS(h.at(4), WindowError);

  auto acyclic = homology_dimensions(identity_pair(q, 1), w);
  for (const auto& [n, dim] : acyclic.entries()) CHECK(dim == 0);

  TruncationWindow uncertified{0, 1, 0, false};
  CHECK_THROWS_AS(homology_dimensions(single(q, 0), uncertified), WindowError);
}

TEST_CASE("truncated complexes only certify their interior", "[complex]") {
  FieldSpec q;
  GradedBasis b(q);
  b.add(0, "a");
  ChainComplex c(b, {}, DegreeRange{0, 4});
  CHECK(c.homology_range() == DegreeRange{1, 3});
  CHECK_NOTHROW(homology_dimensions(c, TruncationWindow::exact(1, 3)));
  CHECK_THROWS_AS(homology_dimensions(c, TruncationWindow::exact(0, 3)), WindowError);
}

TEST_CASE("dual complexes", "[complex][dual]") {
  FieldSpec q;
  auto empty = dual_complex(ChainComplex(GradedBasis(q), {}));
  CHECK(empty.basis().total_dimension() == 0);

  auto d3 = dual_complex(single(q, 3));
  CHECK(d3.dim(-3) == 1);
  CHECK(d3.basis().labels(-3).front() == "g*");

  std::mt19937_64 rng(99);
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto c = random_complex(f, -3, 4, 5, rng);
      REQUIRE(c.basis().total_dimension() <= 40);
      auto dc = dual_complex(c);
      REQUIRE(validate_complex(dc).ok());
      for (int m = -5; m <= 5; ++m) CHECK(betti_direct(dc, m) == betti_direct(c, -m));
      auto ddc = dual_complex(dc);
      REQUIRE(validate_complex(ddc).ok());
      for (int n = -4; n <= 5; ++n) {
        CHECK(ddc.dim(n) == c.dim(n));
        CHECK(rank(ddc.differential(n)) == rank(c.differential(n)));
      }
      auto w = TruncationWindow::exact(-5, 5);
      CHECK(homology_dimensions(ddc, w) == homology_dimensions(c, w));
    }
  }
}

TEST_CASE("a random 20-generator complex and its dual", "[complex][dual]") {
  std::mt19937_64 rng(2026);
  FieldSpec q;
  ChainComplex c;
  do {
    c = random_complex(q, -2, 3, 6, rng);
  } while (c.basis().total_dimension() != 20);
  auto w = TruncationWindow::exact(-4, 4);
  auto h = homology_dimensions(c, w);
  auto hd = homology_dimensions(dual_complex(c), w);
  for (int m = -4; m <= 4; ++m) CHECK(hd.at(m) == h.at(-m));
}

TEST_CASE("tensor products", "[complex][tensor]") {
  FieldSpec q;
  std::mt19937_64 rng(5);

  SECTION("the unit is a two-sided identity") {
    auto c = random_complex(q, -1, 2, 4, rng);
    auto unit = single(q, 0);
    for (const auto& t : {tensor_complex(c, unit), tensor_complex(unit, c)}) {
      for (int n = -1; n <= 2; ++n) {
        CHECK(t.dim(n) == c.dim(n));
        CHECK(t.differential(n) == c.differential(n));
      }
    }
  }

  SECTION("Euler characteristics multiply") {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_complex(q, -2, 2, 3, rng);
      auto b = random_complex(q, -1, 3, 3, rng);
      CHECK(euler_characteristic(tensor_complex(a, b)) ==
            euler_characteristic(a) * euler_characteristic(b));
    }
  }

  SECTION("Kunneth over a field on random pairs") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
      for (int trial = 0; trial < 20; ++trial) {
        auto a = random_complex(f, -2, 2, 3, rng);
        auto b = random_complex(f, -1, 2, 3, rng);
        auto t = tensor_complex(a, b);
        REQUIRE(validate_complex(t).ok());
        auto w = TruncationWindow::exact(-4, 5);
        auto ha = homology_dimensions(a, w);
        auto hb = homology_dimensions(b, w);
        auto ht = homology_dimensions(t, w);
        for (int m = -3; m <= 4; ++m) {
          std::size_t expected = 0;
          for (int i = -2; i <= 2; ++i)
            if (m - i >= -4 && m - i <= 5) expected += ha.at(i) * hb.at(m - i);
          CHECK(ht.at(m) == expected);
        }
      }
    }
  }

  SECTION("windowed tensor agrees with the full one inside the window") {
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_complex(q, -2, 2, 3, rng);
      auto b = random_complex(q, -2, 2, 3, rng);
      auto full = tensor_complex(a, b);
      auto cut = tensor_complex(a, b, TruncationWindow::exact(-1, 1));
      REQUIRE(validate_complex(cut).ok());
      auto w = TruncationWindow::exact(-1, 1);
      CHECK(homology_dimensions(cut, w) == homology_dimensions(full, w));
      CHECK(cut.dim(3) == 0);
    }
  }

  SECTION("a window missing every product degree gives an empty complex") {
    auto a = single(q, 0);
    auto t = tensor_complex(a, a, TruncationWindow::exact(5, 6));
    CHECK(t.basis().total_dimension() == 0);
  }

  SECTION("mixed fields are rejected") {
    CHECK_THROWS_AS(tensor_complex(single(q, 0), single(FieldSpec::prime(3), 0)), FieldError);
  }
}

TEST_CASE("Euler characteristic", "[complex]") {
  FieldSpec q;
  CHECK(euler_characteristic(ChainComplex(GradedBasis(q), {})) == 0);
  CHECK(euler_characteristic(single(q, 1)) == -1);
  CHECK(euler_characteristic(identity_pair(q, 1)) == 0);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = random_complex(q, -3, 3, 4, rng);
    auto h = homology_dimensions(c, TruncationWindow::exact(-3, 3));
    long alt = 0;
    for (const auto& [n, d] : h.entries()) alt += (n % 2 == 0 ? 1 : -1) * static_cast<long>(d);
    CHECK(euler_characteristic(c) == alt);
  }

  GradedBasis b(q);
  b.add(0, "a");
  CHECK_THROWS_AS(euler_characteristic(ChainComplex(b, {}, DegreeRange{0, 3})), BoundednessError);
}
