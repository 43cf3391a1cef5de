#include <doctest.h>

#include "xcrs/catalogue.hpp"
#include "xcrs/cubical.hpp"
#include "xcrs/xcrs_format.hpp"

using namespace xcrs;

TEST_CASE("minimal document is the point complex with no edges") {
  auto doc = parse_xcrs("xcrs 1\nregime free\ndim 1\nobjects: v\nedges:\n");
  REQUIRE(doc.complexes.size() == 1);
  auto const& c = doc.complex("main");
  CHECK(c.regime == Regime::free);
  CHECK(c.cell_counts() == std::vector<int>{1, 0});
  CHECK(check_crossed_complex_axioms(c).pass());
}

TEST_CASE("every catalogue complex survives a round trip") {
  for (auto const& key : catalogue_keys()) {
    CAPTURE(key);
    auto const text  = serialize(catalogue(key), "c");
    auto const again = serialize(parse_xcrs(text));
    CHECK(again == text);
  }
}

TEST_CASE("reparsed cyc:2:2 keeps counts and passes the axioms") {
  auto const c    = catalogue("cyc:2:2");
  auto const back = parse_xcrs(serialize(c)).complex("main");
  CHECK(back.cell_counts() == c.cell_counts());
  CHECK(check_crossed_complex_axioms(back).pass());
}

TEST_CASE("morphism blocks round trip for both regimes") {
  for (auto const& m : concrete_catalogue_morphisms()) {
    CAPTURE(m.name);
    XcrsDocument doc;
    doc.complexes = {{"s", m.src}, {"t", m.tgt}};
    doc.morphisms = {{"f", "s", "t", m.map}};
    auto const text = serialize(doc);
    auto const back = parse_xcrs(text);
    CHECK(serialize(back) == text);
    CHECK(check_crossed_morphism(back.complex("s"), back.complex("t"), back.morphism("f").map).pass());
  }
  auto const c = catalogue("cyc:3:4");
  XcrsDocument doc;
  doc.complexes = {{"c", c}};
  doc.morphisms = {{"id", "c", "c", identity_morphism(c)}};
  auto const text = serialize(doc);
  CHECK(serialize(parse_xcrs(text)) == text);
}

TEST_CASE("cubical tables round trip") {
  auto const l = lambda_truncated(catalogue("cgrp:2"));
  XcrsDocument doc;
  doc.cubicals = {{"k", l.cubes}};
  auto const text = serialize(doc);
  auto const back = parse_xcrs(text);
  CHECK(serialize(back) == text);
  CHECK(check_cubical_laws(back.cubicals[0].cubes).pass());
}

TEST_CASE("semantic errors name the offending id with its location") {
  std::string const text =
      "xcrs 1\nregime free\ndim 2\nobjects: v\nedges:\n  a v v\nbasis 2:\n  r v : a b\n";
  try {
    parse_xcrs(text);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 8);
    CHECK(e.column() == 11);
    CHECK(std::string(e.what()).find("unknown edge 'b'") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  CHECK_THROWS_AS(parse_xcrs(""), ParseError);
  CHECK_THROWS_AS(parse_xcrs("xcrs 2\n"), ParseError);
  CHECK_THROWS_AS(parse_xcrs("xcrs 1\nregime odd\n"), ParseError);
  CHECK_THROWS_AS(parse_xcrs("xcrs 1\nregime free\ndim x\n"), ParseError);
  CHECK_THROWS_AS(parse_xcrs("xcrs 1\nregime free\ndim 1\nobjects: v v\n"), ParseError);
  CHECK_THROWS_AS(parse_xcrs("xcrs 1\nregime free\ndim 1\nobjects: v\nedges:\n  a v w\n"), ParseError);
  CHECK_THROWS_AS(parse_xcrs("xcrs 1\nregime concrete\ndim 2\nobjects: x\narrows:\n  e x x\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_xcrs("xcrs 1\nmorphism f a b\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  auto doc = parse_xcrs("# a loop\nxcrs 1\n\nregime free # free regime\ndim 1\nobjects: v\nedges:\n  a v v\n");
  CHECK(doc.complex("main").cell_counts() == std::vector<int>{1, 1});
}
