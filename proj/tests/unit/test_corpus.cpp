#include <catch2/catch_amalgamated.hpp>

#include "kdual/bar.hpp"
#include "kdual/corpus.hpp"
#include "kdual/errors.hpp"

using namespace kdual;

TEST_CASE("catalogue", "[corpus]") {
  auto names = corpus_names();
  for (const char* expected : {"unit", "sphere-odd:3", "sphere-odd:5", "sphere-even:2", "sphere-even:4",
                               "proj-plane-like", "poly:2", "poly:3", "sq0:2:-2", "sq0:3:-2"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
}

TEST_CASE("entries are valid algebras with certified default windows", "[corpus]") {
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2)})
    for (const auto& name : corpus_names()) {
      INFO(name << " over " << field.name());
      auto entry = corpus_get(name, field);
      CHECK(validate_dga(entry.algebra).ok());
      CHECK(entry.default_window.certified);
      CHECK_NOTHROW(require_certified(entry.algebra, entry.default_window));
      CHECK(entry.expected.count(kKindHH));
      CHECK(entry.expected.count(kKindKoszulDual));
      for (const auto& [kind, table] : entry.expected) CHECK_FALSE(table.provenance.empty());
    }
}

TEST_CASE("named algebras", "[corpus]") {
  FieldSpec q;
  auto unit = corpus_get("unit");
  CHECK(unit.algebra == unit_algebra(q));
  CHECK(corpus_expected("unit", kKindHH).table.at(0) == 1);

  auto s3 = corpus_algebra("sphere-odd:3");
  CHECK(s3.size() == 2);
  CHECK(s3.degree(*s3.find("x")) == -3);
  CHECK(s3.product(*s3.find("x"), *s3.find("x")).empty());

  auto sq = corpus_algebra("sq0:2:-2");
  CHECK(sq.ideal().size() == 2);
  CHECK(sq.in_degree(-2).size() == 2);

  auto p = corpus_algebra("proj-plane-like");
  CHECK(p.product(*p.find("x"), *p.find("x")) == LinearCombination{{*p.find("x^2"), Scalar(q, 1L)}});

  auto poly = corpus_algebra("poly:3");
  CHECK(poly.connectivity() == Connectivity::connective);
  CHECK(poly.expandable());
  CHECK_FALSE(poly.finite_total_dimension());
  auto big = poly.covering({0, 30});
  CHECK(big.find("y^15"));
  CHECK(validate_dga(big).ok());

  auto kd = corpus_expected("sphere-odd:3", kKindKoszulDual);
  for (int m = 0; m <= 12; ++m) CHECK(kd.table.at(m) == (m % 2 == 0 ? 1u : 0u));
  auto sqkd = corpus_expected("sq0:2:-2", kKindKoszulDual);
  for (int m = 0; m <= 6; ++m) CHECK(sqkd.table.at(m) == (std::size_t{1} << m));
}

TEST_CASE("sphere entries agree over Q and F_2 on their Koszul duals", "[corpus]") {
  for (const char* name : {"sphere-odd:3", "sphere-odd:5", "sphere-even:2", "sphere-even:4"}) {
    INFO(name);
    CHECK(corpus_expected(name, kKindKoszulDual).table.entries() ==
          corpus_expected(name, kKindKoszulDual, FieldSpec::prime(2)).table.entries());
  }
  for (const char* name : {"sphere-odd:3", "sphere-odd:5"}) {
    INFO(name);
    CHECK(corpus_expected(name, kKindHH).table.entries() ==
          corpus_expected(name, kKindHH, FieldSpec::prime(2)).table.entries());
  }
}

TEST_CASE("lookup errors", "[corpus]") {
  CHECK_THROWS_AS(corpus_algebra("sphere-odd:4"), LookupError);
  CHECK_THROWS_AS(corpus_algebra("sphere-even:3"), LookupError);
  CHECK_THROWS_AS(corpus_algebra("sq0:2:-1"), LookupError);
  CHECK_THROWS_AS(corpus_algebra("nonsense"), LookupError);
  CHECK_THROWS_AS(corpus_algebra("poly:x"), LookupError);
  CHECK_THROWS_AS(corpus_expected("unit", "bogus-kind"), LookupError);
  CHECK_THROWS_AS(corpus_expected("poly:3", kKindDualityLeft), LookupError);
  CHECK_THROWS_AS(corpus_expected("unit", kKindHH, FieldSpec::prime(7)), LookupError);
}

TEST_CASE("table csv parsing", "[corpus]") {
  auto t = parse_table_csv("degree,dimension\n0,1\n1,0", TruncationWindow::exact(0, 1));
  CHECK(t.at(0) == 1);
  CHECK(t.at(1) == 0);
  CHECK_THROWS_AS(parse_table_csv("deg,dim\n0,1", TruncationWindow::exact(0, 0)), ParseError);
  CHECK_THROWS_AS(parse_table_csv("degree,dimension\n0,x", TruncationWindow::exact(0, 0)), ParseError);
  CHECK_THROWS_AS(parse_table_csv("degree,dimension\n0,1\n0,2", TruncationWindow::exact(0, 0)), ParseError);
  auto inferred = parse_table_csv("degree,dimension\n-2,1\n-1,0\n0,1");
  CHECK(inferred.window().lo == -2);
  CHECK(inferred.window().hi == 0);
  CHECK(inferred.at(-2) == 1);
  CHECK_THROWS_AS(parse_table_csv("degree,dimension\n"), ParseError);
}
