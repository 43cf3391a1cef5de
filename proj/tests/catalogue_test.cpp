#include <doctest.h>

#include "xcrs/catalogue.hpp"
#include "xcrs/tensor.hpp"

using namespace xcrs;

TEST_CASE("every catalogue key passes the axiom checker") {
  for (auto const& key : catalogue_keys()) {
    CAPTURE(key);
    auto const r = check_crossed_complex_axioms(catalogue(key));
    INFO(r.to_string());
    CHECK(r.pass());
  }
}

TEST_CASE("catalogue tensors pass the axiom checker") {
  std::vector<std::string> keys = {"point", "interval", "circle", "cube:2", "cyc:2:3", "cyc:3:4", "cyc:2:2"};
  for (auto const& a : keys) {
    for (auto const& b : keys) {
      auto ca = catalogue(a), cb = catalogue(b);
      // dimension 4 needs a finite pi_1 unless the check cancels syntactically
      bool const infinite = a == "circle" || b == "circle";
      int        n        = std::min(infinite ? 3 : 4, ca.dim + cb.dim);
      CAPTURE(a);
      CAPTURE(b);
      auto t = tensor_free(ca, cb, n);
      auto r = check_crossed_complex_axioms(t.complex);
      INFO(r.to_string());
      CHECK(r.pass());
    }
  }
}
