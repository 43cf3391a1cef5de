#pragma once

#include <map>
#include <vector>

#include "xcrs/coset_enum.hpp"
#include "xcrs/crossed_complex.hpp"
#include "xcrs/crossed_morphism.hpp"

namespace xcrs {

// Breadth-first spanning tree of the component of `root`, visiting vertices
// by id and edges by id; non-tree edges of the component are the generators
// of the fundamental group.
struct SpanningTree {
  int               root = 0;
  std::vector<bool> reached;
  std::vector<Word> path;            // root -> vertex
  std::vector<int>  generator;       // per edge, -1 for tree/unreached edges
  std::vector<int>  generator_edge;  // generator -> edge
};

SpanningTree spanning_tree(Graph const& g, int root);
// Presentation letters of a word, tree edges dropped.
std::vector<int> tree_word(SpanningTree const& t, Word const& w);
// Generators = non-tree edges, relators = delta_2 of the basis.
Presentation fundamental_presentation(CrossedComplex const& c, SpanningTree const& t);

// Subgroup M of pi_1(C, x), given by generating loops at x.
struct Pi1Subgroup {
  bool              all = false;
  std::vector<int>  arrows;  // concrete regime
  std::vector<Word> loops;   // free regime
};

// Every subgroup of pi_1(C, x), each given by generating loops at x, in the
// order of FiniteGroup::subgroups on pi1(c, x).
std::vector<Pi1Subgroup> pi1_subgroups(CrossedComplex const& c, int x,
                                       std::size_t bound = default_coset_bound);

struct Cover {
  CrossedComplex  complex;
  CrossedMorphism projection;
  int             base_lift = 0;  // cover object over x belonging to M

  // free regime bookkeeping: cover vertex (u, i) is u * index + i, and the
  // same layout is used for edges and basis elements.
  SpanningTree tree;
  CosetTable   cosets;

  int index() const { return cosets.index(); }
  int vertex(int u, int coset) const { return u * index() + coset; }
};

// Cover of a connected complex determined by M: for the concrete regime
// the groupoid cover of pi_1 pulled back to C_1 with copies of C_n; for the
// free regime the coset cover with lifted bases.
Cover universal_cover(CrossedComplex const& c, int x, Pi1Subgroup const& m,
                      std::size_t bound = default_coset_bound);

// Path lifting in a free cover.
Word lift_word_from(Cover const& cv, Graph const& base, Word const& w, int start);
Word lift_word_to(Cover const& cv, Graph const& base, Word const& w, int end);
Elem2 lift_elem2(Cover const& cv, CrossedComplex const& base, Elem2 const& a,
                 int at);
ChainElem lift_chain(Cover const& cv, CrossedComplex const& base, int n,
                     ChainElem const& a, int at);

// Image of free elements in the chains of the universal cover; equal
// images mean equal elements (see free_elements_equal).
class ChainImage {
 public:
  explicit ChainImage(CrossedComplex const& c, std::size_t bound = default_coset_bound);

  std::map<int, long> of(Elem2 const& a) const;
  std::map<int, long> of(int n, ChainElem const& a) const;
  Cover const& cover() const { return cover_; }

 private:
  CrossedComplex const* base_;
  Cover                 cover_;
};

}  // namespace xcrs
