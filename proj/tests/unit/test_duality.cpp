#include <catch2/catch_amalgamated.hpp>

#include "algebras.hpp"
#include "kdual/bar.hpp"
#include "kdual/corpus.hpp"
#include "kdual/duality.hpp"
#include "kdual/errors.hpp"
#include "kdual/hochschild.hpp"

using namespace kdual;
using namespace kdual::testing;

namespace {

TruncationWindow raw(int lo, int hi) { return {lo, hi, 0, true}; }

}  // namespace

TEST_CASE("duality for k", "[duality]") {
  auto r = verify_thh_duality(unit_algebra(FieldSpec()), raw(-4, 4));
  CHECK(r.pass);
  CHECK(r.left.entries() == ones_at(-4, 4, {0}));
  CHECK(r.right.entries() == ones_at(-4, 4, {0}));
}

TEST_CASE("duality for the 3-sphere cochains", "[duality]") {
  auto r = verify_thh_duality(corpus_algebra("sphere-odd:3"), raw(-10, 10));
  CHECK(r.pass);
  CHECK_FALSE(r.first_mismatch);
  CHECK_FALSE(r.hypothesis_violated);
  const auto expected = ones_at(-10, 10, {0, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(r.left.entries() == expected);
  CHECK(r.right.entries() == expected);
  CHECK_FALSE(r.left_provenance.empty());
  CHECK_FALSE(r.right_provenance.empty());
}

TEST_CASE("duality for a noncommutative Koszul dual", "[duality]") {
  auto r = verify_thh_duality(corpus_algebra("sq0:2:-2"), raw(-5, 5));
  CHECK(r.pass);
}

TEST_CASE("left side is Hochschild homology with degrees negated", "[duality]") {
  for (const char* name : {"sphere-odd:3", "sphere-even:2", "proj-plane-like", "sq0:2:-2"}) {
    INFO(name);
    auto a = corpus_algebra(name);
    auto r = verify_thh_duality(a, raw(-6, 6));
    auto hh = hh_dimensions(a, certify_window(a, -6, 0));
    for (int m = -6; m <= 6; ++m) CHECK(r.left.at(m) == (m < 0 ? 0 : hh.at(-m)));
  }
}

TEST_CASE("duality matches the shipped tables", "[duality][corpus]") {
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    for (const auto& name : corpus_names()) {
      auto entry = corpus_get(name, field);
      if (!entry.expected.count(kKindDualityLeft)) continue;
      INFO(name << " over " << field.name());
      const auto& left = entry.expected.at(kKindDualityLeft).table;
      const auto& right = entry.expected.at(kKindDualityRight).table;
      auto r = verify_thh_duality(entry.algebra, left.window());
      CHECK(r.pass);
      CHECK(r.left.entries() == left.entries());
      CHECK(r.right.entries() == right.entries());
    }
  }
}

TEST_CASE("infinite total dimension violates the hypothesis", "[duality]") {
  auto r = verify_thh_duality(corpus_algebra("poly:3"), raw(-6, 6));
  CHECK(r.hypothesis_violated);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("free loop profiles", "[duality][free-loop]") {
  SECTION("S^3") {
    auto r = free_loop_profile(3, raw(0, 12));
    CHECK(r.pass);
    CHECK(r.left.entries() == ones_at(0, 12, {0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  }
  SECTION("S^2") {
    auto r = free_loop_profile(2, raw(0, 8));
    CHECK(r.pass);
  }
  SECTION("degenerate window") {
    auto r = free_loop_profile(3, raw(0, 0));
    CHECK(r.pass);
    CHECK(r.left.entries() == ones_at(0, 0, {0}));
  }
  SECTION("shipped closed forms") {
    for (int n : {2, 3, 4, 5}) {
      auto expected = corpus_expected("free-loop:" + std::to_string(n), kKindFreeLoop);
      INFO(n);
      CHECK(free_loop_closed_form(n, expected.table.window()).entries() == expected.table.entries());
      auto r = free_loop_profile(n, expected.table.window());
      CHECK(r.pass);
    }
  }
  SECTION("windows below degree 0 cannot be certified") {
    CHECK_THROWS_AS(free_loop_profile(3, raw(-2, 4)), WindowError);
  }
}
