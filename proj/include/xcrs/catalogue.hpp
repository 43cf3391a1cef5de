#pragma once

#include <string>
#include <vector>

#include "xcrs/crossed_complex.hpp"
#include "xcrs/crossed_morphism.hpp"

namespace xcrs {

// Free complexes.
CrossedComplex point_complex();
CrossedComplex interval_complex();
CrossedComplex circle_complex();
// The n-cube, n <= 3: cells are strings over {0, 1, I}, I marking a free
// coordinate; each cell is based at its all-ones corner.
CrossedComplex cube_complex(int n);
// Free resolution of Z/q truncated at n <= 4: x, r = x^q, s = r^x - r,
// t = sum_k s^(x^k).
CrossedComplex cyclic_resolution(int q, int n);

// Keys:
//   free:     point, interval, circle, cube:n (n <= 3), cyc:q:N (q <= 6, N <= 4),
//             torus:N (N <= 2)
//   concrete: cgrp:q (cyclic, q <= 8), s3, d4, q8, c2xc2, cind:n (indiscrete,
//             n <= 4), cxm:k:q:s (Z/k -> Z/q, c |-> s c, trivial action),
//             caut:k (Z/2 acting on Z/k by inversion, zero boundary),
//             cchain:k:m (Z/m -> Z/k -> 1, zero boundaries, dimension 3)
// Throws DomainError on unknown keys or out-of-range parameters.
CrossedComplex catalogue(std::string const& key);

// One representative per family and parameter set used by the checks.
std::vector<std::string> catalogue_keys();
std::vector<std::string> concrete_catalogue_keys();

struct CatalogueMorphism {
  std::string     name;
  CrossedComplex  src;
  CrossedComplex  tgt;
  CrossedMorphism map;
};

// Identities, covers for every subgroup of pi_1, and a few non-covering maps
// between concrete catalogue complexes.
std::vector<CatalogueMorphism> concrete_catalogue_morphisms();

}  // namespace xcrs
