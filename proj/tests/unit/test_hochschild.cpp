#include <catch2/catch_amalgamated.hpp>

#include "algebras.hpp"
#include "kdual/bar.hpp"
#include "kdual/corpus.hpp"
#include "kdual/errors.hpp"
#include "kdual/hochschild.hpp"

using namespace kdual;
using namespace kdual::testing;

namespace {

DGAlgebra exterior(const FieldSpec& f, int degree, const std::string& x = "x") {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  b.add_basis(x, degree);
  b.set_name("exterior-" + x);
  return std::move(b).build();
}

bool respects_word_filtration(const HochschildComplex& hc) {
  for (const auto& [n, d] : hc.complex().differentials())
    for (std::size_t row = 0; row < d.rows(); ++row)
      for (const auto& e : d.row(row)) {
        long ds = static_cast<long>(hc.word_length(n - 1, row)) - static_cast<long>(hc.word_length(n, e.col));
        if (ds != 0 && ds != -1) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("Hochschild complex of k", "[hochschild]") {
  FieldSpec q;
  auto k = unit_algebra(q);
  auto w = certify_window(k, -4, 4);
  auto hc = hochschild_complex(k, w);
  CHECK(hc.complex().basis().total_dimension() == 1);
  CHECK(hc.complex().basis().labels(0) == std::vector<std::string>{"1⊗[]"});
  CHECK(hh_dimensions(k, w).entries() == ones_at(-4, 4, {0}));
}

TEST_CASE("Hochschild homology of an exterior algebra", "[hochschild]") {
  FieldSpec q;
  auto a = exterior(q, -3);
  auto w = certify_window(a, -12, 0);
  auto hc = hochschild_complex(a, w);
  // all products of letters vanish and the unit terms cancel on single letters
  CHECK(hc.complex().differentials().empty());
  CHECK(hh_dimensions(a, w).entries() == ones_at(-12, 0, {0, -2, -3, -4, -5, -6, -7, -8, -9, -10, -11, -12}));
}

TEST_CASE("Hochschild homology of Q[y_2]", "[hochschild]") {
  auto a = corpus_algebra("poly:3");
  auto w = certify_window(a, 0, 12);
  CHECK(hh_dimensions(a, w).entries() == ones_at(0, 12, {0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
}

TEST_CASE("Hochschild complexes square to zero", "[hochschild]") {
  FieldSpec q;
  std::vector<std::pair<DGAlgebra, std::pair<int, int>>> cases = {
      {coconnective_dg_tensor(q), {-9, 0}},
      {connective_dg_tensor(q), {0, 9}},
      {coconnective_dg_tensor(FieldSpec::prime(5)), {-9, 0}},
      {connective_dg_tensor(FieldSpec::prime(2)), {0, 9}},
      {opposite_dga(coconnective_dg_tensor(q)), {-9, 0}},
      {corpus_algebra("proj-plane-like"), {-10, 0}},
      {corpus_algebra("sq0:2:-2"), {-7, 0}},
      {corpus_algebra("poly:2"), {0, 9}},
      {tensor_dga(coconnective_dg_tensor(q), exterior(q, -3), TruncationWindow{-8, 0, 0, true}), {-8, 0}},
  };
  for (const auto& [a, range] : cases) {
    INFO(a.name());
    auto w = certify_window(a, range.first, range.second);
    auto hc = hochschild_complex(a, w);
    auto report = validate_complex(hc.complex());
    CHECK(report.ok());
    if (!report.ok()) FAIL_CHECK(report.violations.front().witness);
    CHECK(respects_word_filtration(hc));
  }
}

TEST_CASE("square-zero algebras: only unit coefficients carry a differential", "[hochschild]") {
  auto a = corpus_algebra("sq0:2:-2");
  auto w = certify_window(a, -8, 0);
  auto hc = hochschild_complex(a, w);
  std::size_t chains = 0;
  for (const auto& [n, d] : hc.complex().differentials())
    for (std::size_t row = 0; row < d.rows(); ++row)
      for (const auto& e : d.row(row)) {
        ++chains;
        CHECK(a.is_unit(hc.chains(n)[e.col].coefficient));
      }
  CHECK(chains > 0);
}

TEST_CASE("Hochschild homology matches the shipped tables", "[hochschild][corpus]") {
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    for (const auto& name : corpus_names()) {
      INFO(name << " over " << field.name());
      auto expected = corpus_expected(name, kKindHH, field);
      auto a = corpus_algebra(name, field);
      const auto& ew = expected.table.window();
      auto w = certify_window(a, ew.lo, ew.hi);
      CHECK(hh_dimensions(a, w).entries() == expected.table.entries());
      auto longer = w;
      ++longer.word_bound;
      CHECK(hh_dimensions(a, longer).entries() == expected.table.entries());
    }
  }
}

TEST_CASE("uncertified windows are rejected", "[hochschild]") {
  FieldSpec q;
  auto a = exterior(q, -3);
  CHECK_THROWS_AS(hochschild_complex(a, TruncationWindow{-12, 0, 3, true}), WindowError);
  CHECK_THROWS_AS(hochschild_complex(a, TruncationWindow{0, 4, 9, true}), WindowError);
}

TEST_CASE("shuffle map", "[shuffle]") {
  FieldSpec q;
  SECTION("(k, k)") {
    auto k = unit_algebra(q);
    auto r = shuffle_monoidality_check(k, k, TruncationWindow{-3, 0, 0, true});
    CHECK(r.pass);
  }
  SECTION("a unit factor gives the canonical isomorphism") {
    auto a = coconnective_dg_tensor(q);
    auto sh = shuffle_map(unit_algebra(q), a, TruncationWindow{-6, 0, 0, true});
    CHECK(sh.chain_map_defects().empty());
    for (int n = -7; n <= 1; ++n) {
      auto m = sh.component(n);
      REQUIRE(m.rows() == m.cols());
      CHECK(m == SparseMatrix::identity(q, m.rows()));
    }
  }
  SECTION("the (1,1) shuffle carries the letter transposition sign") {
    auto a = exterior(q, -3);
    auto b = exterior(q, -5, "w");
    auto sh = shuffle_map(a, b, TruncationWindow{-8, 0, 0, true});
    // 1[x] (x) 1[w] in degree -6
    const int n = -6;
    const auto& src = sh.source().basis();
    const auto& tgt = sh.target().basis();
    auto col = src.index_of(n, "1⊗[x]⊗1⊗[w]");
    auto xw = tgt.index_of(n, "1⊗1⊗[x⊗1|1⊗w]");
    auto wx = tgt.index_of(n, "1⊗1⊗[1⊗w|x⊗1]");
    REQUIRE(col);
    REQUIRE(xw);
    REQUIRE(wx);
    auto m = sh.component(n);
    CHECK(m.at(*xw, *col) == Scalar(q, 1L));
    // (|x| + 1)(|w| + 1) = 8 is even
    CHECK(m.at(*wx, *col) == Scalar(q, 1L));
  }
  SECTION("Lambda(x_-3) and Lambda(w_-5)") {
    auto a = exterior(q, -3);
    auto b = exterior(q, -5, "w");
    auto r = shuffle_monoidality_check(a, b, TruncationWindow{-12, 0, 0, true});
    CHECK(r.pass);
    CHECK(r.checks.at("chain_map"));
    CHECK(r.checks.at("homology_isomorphism"));
    CHECK(r.left.entries() == r.right.entries());
  }
  SECTION("Lambda(x_-3) and the square-zero algebra") {
    auto r = shuffle_monoidality_check(exterior(q, -3), corpus_algebra("sq0:2:-2"), TruncationWindow{-8, 0, 0, true});
    CHECK(r.pass);
  }
  SECTION("noncommutative algebras with differentials") {
    auto a = coconnective_dg_tensor(q);
    auto sh = shuffle_map(a, exterior(q, -3), TruncationWindow{-7, 0, 0, true});
    CHECK(sh.chain_map_defects().empty());
    auto r = shuffle_monoidality_check(a, a, TruncationWindow{-6, 0, 0, true});
    CHECK(r.pass);
    auto c = connective_dg_tensor(FieldSpec::prime(3));
    auto rc = shuffle_monoidality_check(c, corpus_algebra("poly:2", FieldSpec::prime(3)), TruncationWindow{0, 6, 0, true});
    CHECK(rc.pass);
  }
  SECTION("uncertified window") {
    CHECK_THROWS_AS(shuffle_map(exterior(q, -3), exterior(q, -5), TruncationWindow{-4, 0, 0, false}), WindowError);
  }
}
