#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "xcrs/cover.hpp"
#include "xcrs/crossed_complex.hpp"
#include "xcrs/crossed_morphism.hpp"
#include "xcrs/homology.hpp"

namespace xcrs {

// Largest dimension the tensor boundary rules cover.
inline constexpr int max_tensor_dim = 4;

// A generator a (x) b of the tensor: `left` has dimension `left_dim` in the left
// factor and `right` has dimension k - left_dim in the right one. Generators of
// dimension 0 are vertices and of dimension 1 edges.
struct TensorCell {
  int left_dim = 0;
  int left     = 0;
  int right    = 0;
  auto operator<=>(TensorCell const&) const = default;
};

// Free tensor product with the pair bookkeeping needed to map generators.
// Objects are (u, v) with id u * |right objects| + v; in each dimension the
// generators are ordered by left dimension, then left id, then right id.
struct TensorComplex {
  CrossedComplex                          complex;
  std::vector<std::vector<TensorCell>>    cells;  // cells[k]
  std::vector<std::map<TensorCell, int>>  index;  // index[k]

  int id(int k, TensorCell const& c) const { return index.at(k).at(c); }
};

// Tensor of free complexes truncated at min(n, max_tensor_dim); needs
// n <= a.dim + b.dim. Names are "a|b".
TensorComplex tensor_free(CrossedComplex const& a, CrossedComplex const& b, int n);

// f (x) g for generator maps f: A' -> A, g: B' -> B, as a morphism
// src -> tgt where src = A' (x) B' and tgt = A (x) B.
CrossedMorphism tensor_generator_maps(TensorComplex const& src, TensorComplex const& tgt,
                                      CrossedMorphism const& f, CrossedMorphism const& g);

struct TensorCoveringReport {
  std::string label = "p(x)1";
  CoverClass  classification = CoverClass::neither;
  FiniteGroup pi1_tensor;        // pi_1(A (x) B)
  FiniteGroup pi1_product;       // pi_1(A) x pi_1(B)
  bool        pi1_matches = false;
  FiniteGroup pi1_cover_tensor;  // pi_1(cover (x) B)
  FiniteGroup subgroup_product;  // M x pi_1(B), or M x K for two covers
  bool        subgroup_matches = false;
  int         image_index = 0;  // [pi_1(A (x) B) : image of pi_1(cover (x) B)]
  int         cover_index = 0;  // [pi_1(A) : M], times [pi_1(B) : K] for two covers

  bool pass() const;
  std::string to_string() const;
};

// p (x) 1 for the cover of A determined by M at x, against B.
TensorCoveringReport tensor_covering(CrossedComplex const& a, int x, Pi1Subgroup const& m,
                                     CrossedComplex const& b, int n);

// p (x) q for the covers of A by M at x and of B by K at y; the subgroup
// fields then describe M x K.
TensorCoveringReport tensor_of_coverings(CrossedComplex const& a, int x, Pi1Subgroup const& m,
                                         CrossedComplex const& b, int y, Pi1Subgroup const& k,
                                         int n);

struct AsphericalTensorReport {
  AsphericityReport asphericity;
  FiniteGroup       pi1_product;  // pi_1(F) x pi_1(F')
  bool              pi1_matches = false;
  bool              dd_trivial  = false;

  bool pass() const { return asphericity.finite_cover && asphericity.aspherical && pi1_matches && dd_trivial; }
  std::string to_string() const;
};

AsphericalTensorReport certify_aspherical_tensor(CrossedComplex const& f,
                                                 CrossedComplex const& g, int n);

}  // namespace xcrs
