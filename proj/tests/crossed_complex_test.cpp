#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "xcrs/catalogue.hpp"
#include "xcrs/cover.hpp"
#include "xcrs/homology.hpp"

using namespace xcrs;

namespace {

Word loop_power(int edge, int k) {
  Word w{0, {}};
  for (int i = 0; i < k; ++i) {
    w.letters.push_back({edge, false});
  }
  return w;
}

// circle -> one-vertex complex, sending the loop to edge 0 to the given power
CrossedMorphism circle_to(int power) {
  CrossedMorphism f;
  f.object_map = {0};
  f.cells      = {{loop_power(0, power)}};
  return f;
}

bool same_morphism(CrossedComplex const& src, CrossedComplex const& tgt, CrossedMorphism const& a,
                   CrossedMorphism const& b) {
  if (a.object_map != b.object_map) {
    return false;
  }
  for (int n = 1; n <= src.dim; ++n) {
    for (std::size_t i = 0; i < a.cells[n - 1].size(); ++i) {
      if (!images_equal(tgt, n, a.cells[n - 1][i], b.cells[n - 1][i])) {
        return false;
      }
    }
  }
  return true;
}

bool has_finite_pi1(std::string const& key) {
  // cyc:q:1 stops before the relator, so its pi_1 is infinite
  return (key.starts_with("cyc:") && !key.ends_with(":1")) || key.starts_with("cube:")
         || key == "point" || key == "interval";
}

}  // namespace

TEST_CASE("axiom checker on small concrete complexes") {
  auto c = catalogue("cxm:4:1:0");  // Z/4 over the trivial group, zero boundary
  CHECK(check_crossed_complex_axioms(c).pass());

  // non-abelian C_2 of order 6 with trivial boundary breaks Peiffer
  auto const s3 = FiniteGroup::symmetric3();
  auto&      l  = c.concrete[0];
  l.groups[0].mul   = s3.table();
  l.groups[0].names = s3.names();
  l.boundary[0].assign(6, c.groupoid.identity(0));
  l.action[0] = {0, 1, 2, 3, 4, 5};
  auto const r = check_crossed_complex_axioms(c);
  CHECK(r.structurally_ok());
  CHECK_FALSE(r.pass());
}

TEST_CASE("fundamental groups") {
  for (int q = 2; q <= 4; ++q) {
    for (int n = 2; n <= 4; ++n) {
      CHECK(is_isomorphic(pi1(cyclic_resolution(q, n), 0), FiniteGroup::cyclic(q)));
    }
  }
  CHECK(is_isomorphic(pi1(catalogue("s3"), 0), FiniteGroup::symmetric3()));
  CHECK(is_isomorphic(pi1(catalogue("cxm:2:4:2"), 0), FiniteGroup::cyclic(2)));
  auto const interval = catalogue("interval");
  CHECK(interval.num_objects() == 2);
  CHECK(interval.cell_counts()[1] == 1);
  CHECK(pi1(interval, 0).order() == 1);
  CHECK(pi1(interval, 1).order() == 1);
  CHECK_THROWS_AS(pi1(catalogue("circle"), 0, 1000), BoundExceeded);
}

TEST_CASE("homology at a vertex") {
  CHECK(homology_at_vertex(catalogue("cxm:4:1:0"), 0, 2) == AbelianGroup{0, {4}});
  CHECK(homology_at_vertex(catalogue("cchain:4:2"), 0, 2) == AbelianGroup{0, {4}});
  CHECK(homology_at_vertex(catalogue("cxm:2:4:2"), 0, 2).trivial());

  auto const cover = universal_cover(catalogue("cyc:2:3"), 0, {});
  auto const chains = cover_chain_complex(cover.complex);
  CHECK(chains.ranks == std::vector<int>{2, 2, 2, 2});
  CHECK(homology_at_vertex(cover.complex, 0, 2).trivial());
  CHECK(oracle::chain_homology(chains, 2).trivial());
  CHECK_THROWS_AS(homology_at_vertex(catalogue("cyc:2:3"), 0, 2), DomainError);
}

TEST_CASE("covering classification of crossed morphisms") {
  for (auto const& key : concrete_catalogue_keys()) {
    auto const c = catalogue(key);
    CHECK(is_covering_morphism(c, c, identity_morphism(c)) == CoverClass::covering);
  }
  for (auto const& key : {"cyc:2:2", "cyc:3:4", "cube:2", "torus:2"}) {
    auto const c = catalogue(key);
    CHECK(is_covering_morphism(c, c, identity_morphism(c)) == CoverClass::covering);
  }
  auto const c  = catalogue("cyc:2:2");
  auto const cv = universal_cover(c, 0, {});
  CHECK(is_covering_morphism(cv.complex, c, cv.projection) == CoverClass::covering);
  for (auto const& m : concrete_catalogue_morphisms()) {
    if (m.name == "collapse Z/4 -> Z/2") {
      CHECK(is_covering_morphism(m.src, m.tgt, m.map) == CoverClass::fibration_only);
    }
  }
}

TEST_CASE("covers of cyclic resolutions") {
  auto const c3 = universal_cover(catalogue("cyc:2:3"), 0, {});
  CHECK(c3.complex.cell_counts() == std::vector<int>{2, 2, 2, 2});
  CHECK(check_crossed_complex_axioms(c3.complex).pass());

  auto const c  = catalogue("cyc:4:2");
  auto const m2 = universal_cover(c, 0, {false, {}, {loop_power(0, 2)}});
  CHECK(m2.complex.num_objects() == 2);
  CHECK(is_isomorphic(pi1(m2.complex, m2.base_lift), FiniteGroup::cyclic(2)));

  auto const whole = universal_cover(c, 0, {true, {}, {}});
  CHECK(whole.complex.cell_counts() == c.cell_counts());
  CHECK(is_covering_morphism(whole.complex, c, whole.projection) == CoverClass::covering);
}

TEST_CASE("universal covers are simply connected coverings and free covers stay free") {
  for (auto const& key : catalogue_keys()) {
    if (!has_finite_pi1(key)) {
      continue;
    }
    CAPTURE(key);
    auto const c  = catalogue(key);
    auto const cv = universal_cover(c, 0, {});
    int const  k  = pi1(c, 0).order();
    CHECK(cv.complex.regime == Regime::free);
    CHECK(cv.index() == k);
    auto const base_counts  = c.cell_counts();
    auto const cover_counts = cv.complex.cell_counts();
    for (std::size_t n = 0; n < base_counts.size(); ++n) {
      CHECK(cover_counts[n] == base_counts[n] * k);
    }
    CHECK(pi1(cv.complex, cv.base_lift).order() == 1);
    CHECK(is_covering_morphism(cv.complex, c, cv.projection) == CoverClass::covering);
  }
  for (auto const& key : concrete_catalogue_keys()) {
    CAPTURE(key);
    auto const c  = catalogue(key);
    if (!c.is_connected()) {
      continue;
    }
    auto const cv = universal_cover(c, 0, {});
    CHECK(pi1(cv.complex, cv.base_lift).order() == 1);
    CHECK(check_crossed_complex_axioms(cv.complex).pass());
  }
}

TEST_CASE("composites of coverings are coverings") {
  auto const c   = catalogue("cyc:4:2");
  auto const mid = universal_cover(c, 0, {false, {}, {loop_power(0, 2)}});
  auto const top = universal_cover(mid.complex, mid.base_lift, {});
  auto const pq  = compose(top.complex, mid.complex, c, top.projection, mid.projection);
  CHECK(is_covering_morphism(top.complex, c, pq) == CoverClass::covering);

  auto const g    = catalogue("cgrp:4");
  auto const subs = pi1_subgroups(g, 0);
  for (auto const& m : subs) {
    auto const lower = universal_cover(g, 0, m);
    auto const upper = universal_cover(lower.complex, lower.base_lift, {});
    auto const comp  = compose(upper.complex, lower.complex, g, upper.projection, lower.projection);
    CHECK(is_covering_morphism(upper.complex, g, comp) == CoverClass::covering);
  }
}

TEST_CASE("pi1 subgroups give covers of every index") {
  auto const c    = catalogue("cyc:6:2");
  auto const subs = pi1_subgroups(c, 0);
  CHECK(subs.size() == 4);
  std::multiset<int> indices;
  for (auto const& m : subs) {
    indices.insert(universal_cover(c, 0, m).index());
  }
  CHECK(indices == std::multiset<int>{1, 2, 3, 6});
}

TEST_CASE("lifting through the universal cover of cyc:2:2") {
  auto const c  = catalogue("cyc:2:2");
  auto const cv = universal_cover(c, 0, {});
  auto const circle = catalogue("circle");

  auto const refused = lift_morphism(cv.complex, c, cv.projection, circle, circle_to(1), 0, 0);
  CHECK_FALSE(refused.lift);
  CHECK(refused.witness.find("x") != std::string::npos);

  for (int y : {0, 1}) {
    auto const r = lift_morphism(cv.complex, c, cv.projection, circle, circle_to(2), 0, y);
    REQUIRE(r.lift);
    CHECK(r.lift->object_map[0] == y);
    auto const back = compose(circle, cv.complex, c, *r.lift, cv.projection);
    CHECK(same_morphism(circle, c, back, circle_to(2)));
  }

  auto const interval = catalogue("interval");
  CrossedMorphism f;
  f.object_map = {0, 0};
  f.cells      = {{loop_power(0, 1)}};
  for (int y : {0, 1}) {
    auto const r = lift_morphism(cv.complex, c, cv.projection, interval, f, 0, y);
    REQUIRE(r.lift);
    CHECK(same_morphism(interval, c, compose(interval, cv.complex, c, *r.lift, cv.projection), f));
  }
}

TEST_CASE("lifting preconditions") {
  auto const c  = catalogue("cyc:2:2");
  auto const cv = universal_cover(c, 0, {});
  auto const circle = catalogue("circle");
  CHECK_THROWS_AS(lift_morphism(c, c, circle_to(1), circle, circle_to(1), 0, 0), DomainError);
  CHECK_THROWS_AS(lift_morphism(cv.complex, c, cv.projection, circle, circle_to(1), 0, 7),
                  DomainError);
}

TEST_CASE("enumerated morphisms into concrete complexes are morphisms") {
  auto const interval = catalogue("interval");
  for (auto const& key : {"cgrp:3", "cind:2", "s3"}) {
    auto const c   = catalogue(key);
    auto const all = oracle::all_morphisms(interval, c);
    CHECK(all.size() == static_cast<std::size_t>(c.groupoid.num_arrows()));
    for (auto const& m : all) {
      CHECK(check_crossed_morphism(interval, c, m).pass());
    }
  }
}
