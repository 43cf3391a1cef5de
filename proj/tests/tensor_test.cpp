#include <doctest.h>

#include <algorithm>

#include "xcrs/catalogue.hpp"
#include "xcrs/tensor.hpp"
#include "xcrs/xcrs_format.hpp"

using namespace xcrs;

namespace {

std::vector<int> convolution(std::vector<int> const& a, std::vector<int> const& b, int n) {
  std::vector<int> out(n + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (static_cast<int>(i + j) <= n) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

Word power(int edge, int k) {
  Word w{0, {}};
  w.letters.assign(k, Letter{edge, false});
  return w;
}

}  // namespace

TEST_CASE("tensor of cubes realises the bigger cube") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; m + n <= max_tensor_dim && n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      auto const t      = tensor_free(cube_complex(m), cube_complex(n), m + n);
      auto const counts = t.complex.cell_counts();
      for (int k = 0; k <= m + n; ++k) {
        CHECK(counts[k] == binomial(m + n, k) * (1L << (m + n - k)));
      }
      CHECK(check_crossed_complex_axioms(t.complex).pass());
    }
  }
}

TEST_CASE("the square cell of interval (x) interval has the square's boundary") {
  auto text = serialize(tensor_free(cube_complex(1), cube_complex(1), 2).complex, "main");
  std::erase(text, '|');
  CHECK(text == serialize(cube_complex(2), "main"));
}

TEST_CASE("basis counts convolve") {
  std::vector<std::string> const keys = {"point", "interval", "circle", "cyc:2:2", "cyc:3:3",
                                         "cube:2", "cyc:2:4"};
  for (auto const& ka : keys) {
    for (auto const& kb : keys) {
      auto const a = catalogue(ka);
      auto const b = catalogue(kb);
      int const  n = std::min(max_tensor_dim, a.dim + b.dim);
      CAPTURE(ka);
      CAPTURE(kb);
      CHECK(tensor_free(a, b, n).complex.cell_counts()
            == convolution(a.cell_counts(), b.cell_counts(), n));
    }
  }
  CHECK(tensor_free(catalogue("cyc:2:2"), catalogue("cyc:2:2"), 3).complex.cell_counts()
        == std::vector<int>{1, 2, 3, 2});
  auto const b = catalogue("cyc:3:3");
  CHECK(tensor_free(catalogue("point"), b, 3).complex.cell_counts() == b.cell_counts());
}

TEST_CASE("tensor is associative on bases") {
  auto const a   = catalogue("interval");
  auto const b   = catalogue("cyc:2:2");
  auto const c   = catalogue("circle");
  auto const ab  = tensor_free(a, b, 3).complex;
  auto const bc  = tensor_free(b, c, 3).complex;
  CHECK(tensor_free(ab, c, 4).complex.cell_counts() == tensor_free(a, bc, 4).complex.cell_counts());
}

TEST_CASE("p (x) 1 for covers of cyc:2:2") {
  auto const a = catalogue("cyc:2:2");
  auto const r = tensor_covering(a, 0, {}, a, 3);
  CHECK(r.pass());
  CHECK(r.classification == CoverClass::covering);
  CHECK(is_isomorphic(r.pi1_tensor, FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                FiniteGroup::cyclic(2))));
  CHECK(r.cover_index == 2);
  auto const whole = tensor_covering(a, 0, {true, {}, {}}, a, 3);
  CHECK(whole.pass());
  CHECK(whole.cover_index == 1);
}

TEST_CASE("p (x) q over every pair of subgroups") {
  for (auto const& [ka, kb] : {std::pair{"cyc:2:2", "cyc:3:2"}, std::pair{"cyc:4:2", "cyc:2:2"}}) {
    auto const a = catalogue(ka);
    auto const b = catalogue(kb);
    for (auto const& m : pi1_subgroups(a, 0)) {
      for (auto const& k : pi1_subgroups(b, 0)) {
        auto const r = tensor_of_coverings(a, 0, m, b, 0, k, 3);
        CAPTURE(r.to_string());
        CHECK(r.pass());
        CHECK(r.label == "p(x)q");
      }
    }
  }
}

TEST_CASE("finite cover of the circle tensored with the circle is a covering") {
  auto const circle = catalogue("circle");
  auto const three  = universal_cover(circle, 0, {false, {}, {power(0, 3)}});
  auto const upper  = tensor_free(three.complex, circle, 2);
  auto const lower  = tensor_free(circle, circle, 2);
  auto const map    = tensor_generator_maps(upper, lower, three.projection, identity_morphism(circle));
  CHECK(check_crossed_morphism(upper.complex, lower.complex, map).pass());
  CHECK(is_covering_morphism(upper.complex, lower.complex, map) == CoverClass::covering);
}

TEST_CASE("tensors of aspherical complexes are aspherical") {
  auto const c2 = catalogue("cyc:2:3");
  auto const c3 = catalogue("cyc:3:3");
  auto const same = certify_aspherical_tensor(c2, c2, 3);
  CHECK(same.pass());
  CHECK(is_isomorphic(same.asphericity.pi1,
                      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
  auto const mixed = certify_aspherical_tensor(c2, c3, 3);
  CHECK(mixed.pass());
  CHECK(is_isomorphic(mixed.asphericity.pi1, FiniteGroup::cyclic(6)));
  REQUIRE(mixed.asphericity.homology.size() == 2);
  CHECK(mixed.asphericity.homology[0].trivial());
  CHECK(mixed.asphericity.homology[1].trivial());

  auto const unit  = certify_aspherical_tensor(c2, catalogue("point"), 3);
  auto const alone = asphericity_check(c2, 3);
  CHECK(unit.asphericity.homology == alone.homology);
  CHECK(unit.asphericity.aspherical == alone.aspherical);
}

TEST_CASE("tensor truncation limits") {
  CHECK_THROWS_AS(tensor_free(catalogue("interval"), catalogue("interval"), 3), DomainError);
  CHECK(tensor_free(catalogue("cyc:2:4"), catalogue("cyc:2:4"), 8).complex.dim == max_tensor_dim);
}
