#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xcrs/catalogue.hpp"
#include "xcrs/cover.hpp"
#include "xcrs/homology.hpp"

using namespace xcrs;

namespace {

IntMatrix mat(std::vector<std::vector<long>> const& rows) { return IntMatrix(rows); }

std::vector<std::vector<Integer>> entries(IntMatrix const& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out[i][j] = m.at(i, j);
    }
  }
  return out;
}

bool unimodular(IntMatrix const& m) {
  return m.rows() == m.cols() && abs(oracle::determinant(entries(m))) == 1;
}

void check_smith(IntMatrix const& m) {
  auto const s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(unimodular(s.u));
  CHECK(unimodular(s.v));
  auto const diag = s.diagonal();
  for (std::size_t k = 1; k < diag.size(); ++k) {
    CHECK(diag[k] % diag[k - 1] == 0);
  }
  for (int i = 0; i < s.d.rows(); ++i) {
    for (int j = 0; j < s.d.cols(); ++j) {
      if (i != j) {
        CHECK(s.d.at(i, j) == 0);
      } else {
        CHECK(s.d.at(i, j) >= 0);
      }
    }
  }
  // invariant factors agree with the determinantal divisors
  auto const inv = oracle::matrix_invariants(m);
  CHECK(static_cast<int>(diag.size()) == inv.rank);
  std::vector<Integer> nonunit;
  for (auto const& d : diag) {
    if (d > 1) {
      nonunit.push_back(d);
    }
  }
  CHECK(nonunit == inv.torsion);
}

IntChainComplex single(std::vector<int> ranks, std::vector<std::vector<std::vector<long>>> ds) {
  IntChainComplex c;
  c.ranks = std::move(ranks);
  for (auto const& d : ds) {
    c.boundary.emplace_back(d);
  }
  return c;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  auto const zero = smith_normal_form(mat({{0}}));
  CHECK(zero.d == mat({{0}}));
  CHECK(smith_normal_form(mat({{2, 0}, {0, 3}})).d == mat({{1, 0}, {0, 6}}));
  CHECK(smith_normal_form(mat({{1, 2}, {3, 4}})).d == mat({{1, 0}, {0, 2}}));
  check_smith(mat({{2, 0}, {0, 3}}));
  check_smith(mat({{1, 2}, {3, 4}}));
  check_smith(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
}

TEST_CASE("Smith normal form on random matrices satisfies U M V = D") {
  std::mt19937                       rng(20240611);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int t = 0; t < 300; ++t) {
    int const                      r = dim(rng), c = dim(rng);
    std::vector<std::vector<long>> rows(r, std::vector<long>(c));
    for (auto& row : rows) {
      for (auto& x : row) {
        x = entry(rng);
      }
    }
    check_smith(IntMatrix(rows));
  }
}

TEST_CASE("chain homology examples") {
  auto const circle = single({1, 1}, {{{0}}});
  CHECK(chain_homology(circle, 0) == AbelianGroup{1, {}});
  CHECK(chain_homology(circle, 1) == AbelianGroup{1, {}});
  IntChainComplex zero;
  zero.ranks    = {0, 0};
  zero.boundary = {IntMatrix(0, 0)};
  CHECK(chain_homology(zero, 0).trivial());
  CHECK(chain_homology(zero, 1).trivial());
  auto const cyc = single({2, 2, 2}, {{{-1, 1}, {1, -1}}, {{1, 1}, {1, 1}}});
  CHECK(chain_homology(cyc, 1).trivial());
  CHECK(oracle::chain_homology(cyc, 1).trivial());
  auto const torsion = single({1, 1, 1}, {{{0}}, {{2}}});
  CHECK(chain_homology(torsion, 1) == AbelianGroup{0, {2}});
  CHECK_THROWS_AS(chain_homology(single({1, 1, 1}, {{{1}}, {{1}}}), 1), DomainError);
}

TEST_CASE("chain homology agrees with determinantal divisors on random complexes") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    auto const c = oracle::random_chain_complex(rng);
    for (int n = 0; n <= c.top(); ++n) {
      CHECK(chain_homology(c, n) == oracle::chain_homology(c, n));
    }
  }
}

TEST_CASE("cover chain complexes") {
  auto const circle = catalogue("circle");
  Word       a3{0, {{0, false}, {0, false}, {0, false}}};
  auto const three  = universal_cover(circle, 0, {false, {}, {a3}});
  auto const chains = cover_chain_complex(three.complex);
  CHECK(chains.ranks == std::vector<int>{3, 3});
  CHECK(chain_homology(chains, 0) == AbelianGroup{1, {}});
  CHECK(chain_homology(chains, 1) == AbelianGroup{1, {}});

  auto const interval = cover_chain_complex(catalogue("interval"));
  CHECK(interval.ranks == std::vector<int>{2, 1});
  CHECK(chain_homology(interval, 0) == AbelianGroup{1, {}});
  CHECK(chain_homology(interval, 1).trivial());

  auto const up = cover_chain_complex(universal_cover(catalogue("cyc:2:3"), 0, {}).complex);
  CHECK(chain_homology(up, 1).trivial());
  CHECK(chain_homology(up, 2).trivial());

  for (auto const& key : {"cyc:2:4", "cyc:3:3", "cube:3", "cyc:5:4"}) {
    CAPTURE(key);
    auto const cc = cover_chain_complex(universal_cover(catalogue(key), 0, {}).complex);
    CHECK_NOTHROW(check_chain_complex(cc));
    for (int n = 0; n < cc.top(); ++n) {
      CHECK(chain_homology(cc, n) == oracle::chain_homology(cc, n));
    }
  }
}

TEST_CASE("asphericity in a window") {
  auto const r = asphericity_check(catalogue("cyc:2:3"), 3);
  REQUIRE(r.finite_cover);
  CHECK(r.aspherical);
  REQUIRE(r.homology.size() == 2);
  CHECK(r.homology[0].trivial());
  CHECK(r.homology[1].trivial());

  auto const low = asphericity_check(catalogue("cyc:2:2"), 2);
  REQUIRE(low.finite_cover);
  REQUIRE(low.homology.size() == 1);
  CHECK(low.homology[0].trivial());

  auto const line = asphericity_check(catalogue("circle"), 1, 1000);
  CHECK_FALSE(line.finite_cover);
  CHECK(line.to_string().find("window requires finite cover") != std::string::npos);
}

TEST_CASE("chain homology agrees with mod m enumeration through universal coefficients") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto const                      c = oracle::random_chain_complex(rng);
    std::vector<AbelianGroup>       h;
    for (int n = 0; n <= c.top(); ++n) {
      h.push_back(chain_homology(c, n));
    }
    for (int m : {2, 3, 4, 6}) {
      for (int n = 0; n <= c.top(); ++n) {
        CAPTURE(n);
        CAPTURE(m);
        CHECK(oracle::mod_homology_order(c, n, m)
              == oracle::mod_homology_prediction(h[n], n > 0 ? &h[n - 1] : nullptr, m));
      }
    }
  }
}
