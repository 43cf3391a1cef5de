#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xcrs/crossed_complex.hpp"

namespace xcrs {

// Image of one generator. Concrete targets use ids (arrow ids in dimension
// 1, global element ids above); free targets use the element types of the
// matching dimension.
using CellImage = std::variant<int, Word, Elem2, ChainElem>;

// Generators of the source are: arrows or edges in dimension 1, global
// element ids (concrete) or basis elements (free) above. A concrete source
// requires a concrete target.
struct CrossedMorphism {
  std::vector<int>                    object_map;
  std::vector<std::vector<CellImage>> cells;  // cells[n - 1]
};

Report check_crossed_morphism(CrossedComplex const& src, CrossedComplex const& tgt,
                              CrossedMorphism const& f);

CrossedMorphism identity_morphism(CrossedComplex const& c);

// "first then second"; images of `first` are pushed through `second`.
CrossedMorphism compose(CrossedComplex const& a, CrossedComplex const& b,
                        CrossedComplex const& c, CrossedMorphism const& first,
                        CrossedMorphism const& second);

// True when every generator goes to a single positive generator with
// trivial transport (projections of covers, tensors of such maps).
bool is_generator_map(CrossedComplex const& src, CrossedComplex const& tgt,
                      CrossedMorphism const& f);

// covering iff p_1 is a groupoid covering and every p_n is bijective on
// each vertex; fibration_only iff the same maps are all surjective.
// Free regime: graph covering in dimension 1 and basis fibres above,
// which needs a generator map. Throws DomainError on a regime mismatch or
// an invalid morphism.
CoverClass is_covering_morphism(CrossedComplex const& src, CrossedComplex const& tgt,
                                CrossedMorphism const& p);

struct LiftResult {
  std::optional<CrossedMorphism> lift;
  // When the lift is refused: a loop at the basepoint of F whose image is
  // not in p(D_1(y)), rendered as text, plus its image.
  std::string witness;
};

// Lifts f: F -> C through the covering p: D -> C with x |-> y, following the
// tree construction: tau_u runs from u to x along a breadth-first tree,
// lifted tau's end at y, and higher elements are moved to x, lifted there,
// and moved back. Throws DomainError when p is not a covering, F is not
// connected or p(y) != f(x).
LiftResult lift_morphism(CrossedComplex const& d, CrossedComplex const& c,
                         CrossedMorphism const& p, CrossedComplex const& f_src,
                         CrossedMorphism const& f, int x, int y);

// Image of a word / element under a morphism out of a free complex.
CellImage apply_word(CrossedComplex const& src, CrossedComplex const& tgt,
                     CrossedMorphism const& f, Word const& w);
CellImage apply_elem2(CrossedComplex const& src, CrossedComplex const& tgt,
                      CrossedMorphism const& f, Elem2 const& a);
CellImage apply_chain(CrossedComplex const& src, CrossedComplex const& tgt,
                      CrossedMorphism const& f, int n, ChainElem const& a);

// Equality of two images in the target, in dimension n.
bool images_equal(CrossedComplex const& tgt, int n, CellImage const& a,
                  CellImage const& b);

std::string to_string(CrossedComplex const& tgt, int n, CellImage const& a);

}  // namespace xcrs
