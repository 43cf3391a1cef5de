#include <doctest.h>

#include "xcrs/catalogue.hpp"
#include "xcrs/cover.hpp"
#include "xcrs/cubical.hpp"

using namespace xcrs;

namespace {

// Thin squares or cubes matching a box, found by scanning all of K_n.
std::vector<int> thin_fillers_by_scan(CubicalObject const& k, Box const& b) {
  std::vector<int> out;
  for (int x = 0; x < k.sizes[b.n]; ++x) {
    if (!k.is_thin(b.n, x)) {
      continue;
    }
    bool match = true;
    for (int i = 1; i <= b.n && match; ++i) {
      for (int s = 0; s < 2 && match; ++s) {
        if (i == b.omit_i && s == b.omit_sign) {
          continue;
        }
        match = k.face(b.n, i, s, x) == b.faces[i - 1][s];
      }
    }
    if (match) {
      out.push_back(x);
    }
  }
  return out;
}

// Number of (c, shell) pairs: squares of lambda for a one-object complex are
// edge quadruples (a, b, a', b') with a b' b^-1 a'^-1 = delta c, counted with
// the preimages c.
long square_count(CrossedComplex const& c) {
  auto const& g     = c.groupoid;
  auto const& layer = c.layer(2);
  int const   m     = g.num_arrows();
  long        count = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int a2 = 0; a2 < m; ++a2) {
        for (int b2 = 0; b2 < m; ++b2) {
          int const w = g.compose(g.compose(g.compose(a, b2), g.inverse(a2)), g.inverse(b));
          for (int x = 0; x < layer.groups[0].size(); ++x) {
            count += layer.boundary[0][x] == w ? 1 : 0;
          }
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("lambda of the trivial complex is a point in every dimension") {
  auto const l = lambda_truncated(catalogue("cgrp:1"));
  CHECK(l.cubes.top == 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(l.cubes.sizes[n] == 1);
  }
  CHECK(check_cubical_laws(l.cubes).pass());
}

TEST_CASE("lambda of concrete complexes satisfies the cubical laws") {
  for (auto const& key : concrete_catalogue_keys()) {
    CAPTURE(key);
    auto const l = lambda_truncated(catalogue(key));
    auto const r = check_cubical_laws(l.cubes);
    CAPTURE(r.to_string());
    CHECK(r.pass());
  }
}

TEST_CASE("square counts of lambda match the shell enumeration") {
  for (auto const& key : {"cgrp:2", "cgrp:3", "s3", "q8", "cxm:2:1:0", "cxm:2:2:0", "cxm:2:4:2",
                          "caut:3"}) {
    CAPTURE(key);
    auto const c = catalogue(key);
    auto const l = lambda_truncated(c);
    CHECK(l.cubes.sizes[1] == c.groupoid.num_arrows());
    CHECK(l.cubes.sizes[2] == square_count(c));
  }
  CHECK(lambda_truncated(catalogue("s3")).cubes.sizes[2] == 216);
}

TEST_CASE("a swapped connection entry is caught") {
  auto k = lambda_truncated(catalogue("cgrp:2")).cubes;
  auto& row = k.connections[1][0][0];
  REQUIRE(row.size() == 2);
  REQUIRE(row[0] != row[1]);
  std::swap(row[0], row[1]);
  auto const r = check_cubical_laws(k);
  REQUIRE_FALSE(r.pass());
  CHECK_FALSE(r.violations.front().law.empty());
}

TEST_CASE("thin fillers of 2-boxes") {
  auto const c = catalogue("s3");
  auto const l = lambda_truncated(c);
  auto const& k = l.cubes;

  // all edges at the point are identities: the filler is the doubly degenerate square
  int const  id_edge = k.degeneracy(0, 1, 0);
  int const  flat    = k.degeneracy(1, 1, id_edge);
  Box const  flat_box = box_of(k, 2, flat, 2, 1);
  CHECK(thin_filler(k, flat_box) == flat);
  CHECK(k.degeneracy(1, 2, id_edge) == flat);

  for (int a = 0; a < k.sizes[1]; ++a) {
    Box b;
    b.n         = 2;
    b.omit_i    = 2;
    b.omit_sign = 1;
    b.faces     = {{a, a}, {id_edge, -1}};
    auto const scan = thin_fillers_by_scan(k, b);
    REQUIRE(scan.size() == 1);
    CHECK(thin_filler(k, b) == scan.front());
  }
}

TEST_CASE("thin 3-boxes with thin faces have thin fillers and thin missing faces") {
  auto const l = lambda_truncated(catalogue("cxm:2:1:0"));
  auto const& k = l.cubes;
  REQUIRE(k.top == 3);
  int checked = 0;
  for (int x = 0; x < k.sizes[3]; ++x) {
    if (!k.is_thin(3, x)) {
      continue;
    }
    for (int i = 1; i <= 3; ++i) {
      for (int s = 0; s < 2; ++s) {
        auto const b   = box_of(k, 3, x, i, s);
        bool       all = true;
        for (int j = 1; j <= 3; ++j) {
          for (int t = 0; t < 2; ++t) {
            if (j != i || t != s) {
              all = all && k.is_thin(2, b.faces[j - 1][t]);
            }
          }
        }
        if (!all) {
          continue;
        }
        ++checked;
        int const f = thin_filler(k, b);
        CHECK(f == x);
        CHECK(k.is_thin(2, k.face(3, i, s, f)));
      }
    }
  }
  CHECK(checked > 0);
  CHECK(check_unique_thin_fillers(k).pass());
}

TEST_CASE("box lifting agrees with the crossed-complex covering test") {
  for (auto const& m : concrete_catalogue_morphisms()) {
    CAPTURE(m.name);
    auto const ls  = lambda_truncated(m.src);
    auto const lt  = lambda_truncated(m.tgt);
    auto const f   = lambda_map(m.src, ls, m.tgt, lt, m.map);
    CHECK(check_cubical_map(ls.cubes, lt.cubes, f).pass());
    auto const box = has_unique_box_lifting(ls.cubes, lt.cubes, f);
    auto const cls = is_covering_morphism(m.src, m.tgt, m.map);
    switch (cls) {
      case CoverClass::covering:       CHECK(box == BoxLifting::covering); break;
      case CoverClass::fibration_only: CHECK(box == BoxLifting::kan_only); break;
      case CoverClass::neither:        CHECK(box == BoxLifting::neither); break;
    }
  }
}

TEST_CASE("box lifting on named maps") {
  auto const c  = catalogue("cgrp:2");
  auto const l  = lambda_truncated(c);
  auto const id = lambda_map(c, l, c, l, identity_morphism(c));
  CHECK(has_unique_box_lifting(l.cubes, l.cubes, id) == BoxLifting::covering);

  auto const cv = universal_cover(c, 0, {});
  auto const lu = lambda_truncated(cv.complex);
  auto const p  = lambda_map(cv.complex, lu, c, l, cv.projection);
  CHECK(has_unique_box_lifting(lu.cubes, l.cubes, p) == BoxLifting::covering);

  for (auto const& m : concrete_catalogue_morphisms()) {
    if (m.name == "collapse Z/4 -> Z/2") {
      auto const ls = lambda_truncated(m.src);
      auto const lt = lambda_truncated(m.tgt);
      CHECK(has_unique_box_lifting(ls.cubes, lt.cubes, lambda_map(m.src, ls, m.tgt, lt, m.map))
            == BoxLifting::kan_only);
    }
  }
}

TEST_CASE("unary law table covers every family") {
  auto const laws = unary_laws(3);
  for (std::string family : {"face", "degeneracy", "connection", "negative", "transport"}) {
    bool found = false;
    for (auto const& law : laws) {
      found = found || law.name.find(family) != std::string::npos;
    }
    CAPTURE(family);
    CHECK(found);
  }
}
