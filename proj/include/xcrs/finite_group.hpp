#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xcrs/report.hpp"

namespace xcrs {

// A finite group given by its multiplication table on {0, ..., n-1}.
// Products are written left-to-right: mul(a, b) is "a then b".
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}
  // Throws StructuralError unless `table` is a group table.
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {});

  static FiniteGroup trivial() { return FiniteGroup(); }
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);  // order 2n
  static FiniteGroup symmetric3();
  static FiniteGroup quaternion();
  static FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, long k) const;
  int element_order(int a) const;
  bool is_abelian() const;

  std::vector<std::vector<int>> const& table() const { return table_; }
  std::string const& name(int a) const { return names_[a]; }
  std::vector<std::string> const& names() const { return names_; }

  // Closure of `gens` under multiplication, sorted.
  std::vector<int> generated_subgroup(std::vector<int> const& gens) const;
  // Every subgroup, each as a sorted element list.
  std::vector<std::vector<int>> subgroups() const;
  bool is_subgroup(std::vector<int> const& elems) const;
  bool is_normal(std::vector<int> const& subgroup) const;
  // Subgroup as a group in its own right; `embedding[i]` is the element of
  // *this corresponding to i.
  FiniteGroup restrict_to(std::vector<int> const& subgroup,
                          std::vector<int>* embedding = nullptr) const;
  // Left cosets are not needed anywhere; quotient by a normal subgroup with
  // `projection[g]` the class of g.
  FiniteGroup quotient(std::vector<int> const& normal,
                       std::vector<int>* projection = nullptr) const;

  // Greedy small generating set.
  std::vector<int> generators() const;

  // (rank 0) invariant factors d1 | d2 | ... of an abelian group.
  std::vector<long> invariant_factors() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int>              inverse_;
  std::vector<std::string>      names_;
  int                           identity_ = 0;
};

// Checks a raw table for the group laws. Tables with out-of-range entries
// are reported as structural problems.
Report check_group_table(std::vector<std::vector<int>> const& table);

// Brute-force isomorphism test for small groups: tries every assignment of
// a generating set of `g` to elements of `h` of matching orders.
bool is_isomorphic(FiniteGroup const& g, FiniteGroup const& h);
std::optional<std::vector<int>> find_isomorphism(FiniteGroup const& g,
                                                 FiniteGroup const& h);

// "C6", "C2 x C2", ... for abelian groups, otherwise "order N".
std::string describe(FiniteGroup const& g);

}  // namespace xcrs
