#pragma once

#include <cstddef>
#include <vector>

#include "xcrs/finite_group.hpp"

namespace xcrs {

// Group presentation on generators 0..n-1. A letter is k+1 for generator k
// and -(k+1) for its inverse.
struct Presentation {
  int                           generators = 0;
  std::vector<std::vector<int>> relators;
};

// Standardized coset table of a finite-index subgroup: coset 0 is the
// subgroup itself, cosets are numbered in breadth-first order.
struct CosetTable {
  int                           generators = 0;
  std::vector<std::vector<int>> table;            // coset x (2*generators)
  std::vector<std::vector<int>> representatives;  // shortest word per coset

  int index() const { return static_cast<int>(table.size()); }
  int act(int coset, int letter) const;
  int trace(int coset, std::vector<int> const& word) const;
};

inline constexpr std::size_t default_coset_bound = 100000;

// Hasse-Lange-Trotter style enumeration. Throws BoundExceeded ("not finite
// within bound") when more than `max_cosets` cosets get defined.
CosetTable enumerate_cosets(Presentation const&                  p,
                            std::vector<std::vector<int>> const& subgroup,
                            std::size_t max_cosets = default_coset_bound);

// The group itself, from the table of the trivial subgroup: element i is
// the coset reached by representatives[i]; products are traced words.
FiniteGroup group_from_regular_table(CosetTable const& t);

}  // namespace xcrs
