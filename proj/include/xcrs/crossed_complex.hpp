#pragma once

#include <string>
#include <variant>
#include <vector>

#include "xcrs/finite_group.hpp"
#include "xcrs/free_groupoid.hpp"
#include "xcrs/groupoid.hpp"
#include "xcrs/report.hpp"

namespace xcrs {

enum class Regime { concrete, free };

// Raw multiplication table; validity is established by the axiom checker,
// not by construction, so that broken inputs remain representable.
struct GroupTable {
  std::vector<std::string>      names;
  std::vector<std::vector<int>> mul;

  int size() const { return static_cast<int>(mul.size()); }
  int identity() const;
  int inverse(int a) const;
  int index(std::string const& name) const;  // -1 if absent
};

// Dimension n >= 2 of a concrete complex.
struct ConcreteLayer {
  std::vector<GroupTable>       groups;    // C_n(p) per object
  std::vector<std::vector<int>> boundary;  // [p][c]: loop arrow at p (n = 2) or element of C_{n-1}(p)
  std::vector<std::vector<int>> action;    // [arrow a][c in C_n(src a)]: element of C_n(dst a)

  // Elements are numbered globally by object, then locally.
  int total() const;
  int offset(int p) const;
  int global(int p, int c) const { return offset(p) + c; }
  std::pair<int, int> locate(int g) const;  // (object, local)
};

// ((basis)^transport)^(+-1); the transport runs from the basis element's
// base to the vertex where the term lives.
struct Gen2 {
  int  basis = 0;
  Word transport;
  bool inverse = false;
  auto operator<=>(Gen2 const&) const = default;
};

// Element of a free crossed module, as a product of decorated generators.
// Products only cancel adjacent inverse pairs; equality up to the Peiffer
// relations is decided elsewhere (see free_elements_equal).
struct Elem2 {
  int               base = 0;
  std::vector<Gen2> terms;
  auto operator<=>(Elem2 const&) const = default;
};

struct ChainTerm {
  long coef  = 0;
  int  basis = 0;
  Word transport;
  auto operator<=>(ChainTerm const&) const = default;
};

// Element of a free module in dimension >= 3: an integer combination of
// transported basis elements, kept merged and sorted.
struct ChainElem {
  int                    base = 0;
  std::vector<ChainTerm> terms;
  auto operator<=>(ChainElem const&) const = default;
};

// Dimension n >= 2 of a free complex. boundary[b] holds a Word (n = 2),
// Elem2 (n = 3) or ChainElem (n >= 4).
struct FreeLayer {
  using Boundary = std::variant<Word, Elem2, ChainElem>;
  std::vector<std::string> names;
  std::vector<int>         base;
  std::vector<Boundary>    boundary;

  int size() const { return static_cast<int>(names.size()); }
  int index(std::string const& name) const;
};

// Crossed complex truncated at `dim`; dimensions above it are trivial.
struct CrossedComplex {
  Regime regime = Regime::free;
  int    dim    = 1;

  FiniteGroupoid             groupoid;  // concrete dimension 1
  std::vector<ConcreteLayer> concrete;  // concrete[n - 2]

  Graph                  graph;  // free dimension 1
  std::vector<FreeLayer> free;   // free[n - 2]

  int num_objects() const;
  std::vector<std::string> const& object_names() const;
  int object_index(std::string const& name) const;
  // Generators per dimension: objects, edges, basis sizes (free regime);
  // objects, arrows, element counts (concrete regime).
  std::vector<int> cell_counts() const;
  bool is_connected() const;

  ConcreteLayer const& layer(int n) const { return concrete.at(n - 2); }
  FreeLayer const& basis(int n) const { return free.at(n - 2); }
};

Report check_crossed_complex_axioms(CrossedComplex const& c);

// --- free element arithmetic -------------------------------------------------

Elem2 elem2_identity(int base);
Elem2 elem2_generator(CrossedComplex const& c, int basis);
Elem2 elem2_mul(Elem2 const& a, Elem2 const& b);
Elem2 elem2_inverse(Elem2 const& a);
Elem2 elem2_act(Graph const& g, Elem2 const& a, Word const& w);
Elem2 elem2_power(Elem2 const& a, long k);
// delta_2 as a reduced word at a.base.
Word elem2_boundary(CrossedComplex const& c, Elem2 const& a);

ChainElem chain_zero(int base);
ChainElem chain_generator(CrossedComplex const& c, int n, int basis);
ChainElem chain_add(ChainElem const& a, ChainElem const& b);
ChainElem chain_scale(ChainElem const& a, long k);
ChainElem chain_act(Graph const& g, ChainElem const& a, Word const& w);
ChainElem chain_normalize(ChainElem a);

// Boundary of a dimension-3 element (sum of transported boundaries). The
// factors lie in the centre of C_2 once delta_2 delta_3 is trivial, so their
// order is immaterial.
Elem2 chain_boundary3(CrossedComplex const& c, ChainElem const& a);
ChainElem chain_boundary(CrossedComplex const& c, int n, ChainElem const& a);

std::string to_string(CrossedComplex const& c, Elem2 const& a);
std::string to_string(CrossedComplex const& c, int n, ChainElem const& a);

// --- homotopy data -----------------------------------------------------------

// pi_1(C, x) = C_1(x) / delta_2 C_2(x). Free regime uses coset enumeration and
// throws BoundExceeded ("not finite within bound").
FiniteGroup pi1(CrossedComplex const& c, int x,
                std::size_t bound = 100000);

// Concrete regime: the quotient groupoid C_1 / delta_2 C_2.
FiniteGroupoid pi1_groupoid(CrossedComplex const& c,
                            GroupoidMorphism* projection = nullptr);

// Elements equal in C_n of a free complex. Dimension 1 compares reduced
// words; dimension >= 2 compares delta_2 and the image in the chains of the
// universal cover, which is exact because ker delta_2 embeds there. Needs a
// finite pi_1 in dimensions >= 2.
bool free_elements_equal(CrossedComplex const& c, Elem2 const& a, Elem2 const& b);
bool free_elements_equal(CrossedComplex const& c, int n, ChainElem const& a,
                         ChainElem const& b);

}  // namespace xcrs
