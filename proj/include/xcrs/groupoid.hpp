#pragma once

#include <string>
#include <vector>

#include "xcrs/finite_group.hpp"
#include "xcrs/report.hpp"

namespace xcrs {

struct Arrow {
  int src = 0;
  int dst = 0;
};

// A finite groupoid given by explicit tables. Composition is written
// left-to-right: compose(a, b) is defined iff dst(a) == src(b).
//
// The tables are plain data so that malformed inputs (from files or
// deliberate mutations) can be represented and then diagnosed by
// check_groupoid_axioms.
struct FiniteGroupoid {
  std::vector<std::string> object_names;
  std::vector<std::string> arrow_names;
  std::vector<Arrow>       arrows;
  std::vector<int>         compose_table;  // m*m, -1 where undefined
  std::vector<int>         inverse_table;  // per arrow
  std::vector<int>         identity_table; // per object

  int num_objects() const { return static_cast<int>(object_names.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int src(int a) const { return arrows[a].src; }
  int dst(int a) const { return arrows[a].dst; }
  int compose(int a, int b) const { return compose_table[a * num_arrows() + b]; }
  int inverse(int a) const { return inverse_table[a]; }
  int identity(int x) const { return identity_table[x]; }

  std::vector<int> hom(int u, int v) const;
  std::vector<int> star(int x) const;
  // Arrows of the vertex group G(x); the identity comes first.
  std::vector<int> vertex_group_arrows(int x) const;
  // The vertex group with local indices; `arrows_out[i]` is the arrow of
  // local element i.
  FiniteGroup vertex_group(int x, std::vector<int>* arrows_out = nullptr) const;
  // Component label per object.
  std::vector<int> components() const;
  bool is_connected() const;
  int object_index(std::string const& name) const;  // -1 if absent
  int arrow_index(std::string const& name) const;

  static FiniteGroupoid from_group(FiniteGroup const& g,
                                   std::string const& object = "x");
  static FiniteGroupoid indiscrete(int n);
  static FiniteGroupoid discrete(int n);
  // Builds the tables from arrows plus a total composition function.
  template <typename Compose>
  static FiniteGroupoid build(std::vector<std::string> objects,
                              std::vector<std::string> arrow_names,
                              std::vector<Arrow> arrows, Compose&& compose);
};

struct GroupoidMorphism {
  std::vector<int> object_map;
  std::vector<int> arrow_map;
};

// Subgroup M of the vertex group G(x), listed explicitly as arrows.
struct CoverSpec {
  int              basepoint = 0;
  std::vector<int> subgroup;
};

struct GroupoidCover {
  FiniteGroupoid   cover;
  GroupoidMorphism projection;
  // For each cover object, the representative arrow g in Star(x) of its
  // coset M g.
  std::vector<int> coset_representative;
};

Report check_groupoid_axioms(FiniteGroupoid const& g);
Report check_groupoid_morphism(FiniteGroupoid const& h, FiniteGroupoid const& g,
                               GroupoidMorphism const& p);

// Arrows with dst == y. Throws DomainError on an unknown object.
std::vector<int> costar(FiniteGroupoid const& g, int y);

// covering iff every costar map is a bijection; fibration_only iff all are
// surjective. Throws DomainError if p is not a morphism.
CoverClass is_covering_groupoid(FiniteGroupoid const& h, FiniteGroupoid const& g,
                                GroupoidMorphism const& p);

GroupoidMorphism identity_morphism(FiniteGroupoid const& g);
GroupoidMorphism compose(GroupoidMorphism const& first,
                         GroupoidMorphism const& second);

// Cover determined by a subgroup M of G(x): objects are the right cosets M g
// for g in Star(x), arrows (M g, a) : M g -> M g a.
GroupoidCover universal_cover_groupoid(FiniteGroupoid const& g,
                                       CoverSpec const&      spec);

// Quotient by a totally disconnected normal subgroupoid given per object.
// `projection` receives the quotient map.
FiniteGroupoid quotient_by_normal_subgroupoid(
    FiniteGroupoid const& g, std::vector<std::vector<int>> const& kernel,
    GroupoidMorphism* projection = nullptr);

// ---------------------------------------------------------------------------

template <typename Compose>
FiniteGroupoid FiniteGroupoid::build(std::vector<std::string> objects,
                                     std::vector<std::string> arrow_names,
                                     std::vector<Arrow> arrows,
                                     Compose&&          compose) {
  FiniteGroupoid g;
  g.object_names = std::move(objects);
  g.arrow_names  = std::move(arrow_names);
  g.arrows       = std::move(arrows);
  int const m    = g.num_arrows();
  g.compose_table.assign(static_cast<std::size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (g.arrows[a].dst == g.arrows[b].src) {
        g.compose_table[a * m + b] = compose(a, b);
      }
    }
  }
  g.identity_table.assign(g.num_objects(), -1);
  for (int a = 0; a < m; ++a) {
    int x = g.arrows[a].src;
    if (g.arrows[a].dst == x && g.identity_table[x] < 0) {
      bool ok = true;
      for (int b = 0; b < m && ok; ++b) {
        if (g.arrows[b].src == x) {
          ok = g.compose_table[a * m + b] == b;
        }
      }
      if (ok) {
        g.identity_table[x] = a;
      }
    }
  }
  g.inverse_table.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int c = g.compose_table[a * m + b];
      if (c >= 0 && g.arrows[a].src == g.arrows[b].dst
          && c == g.identity_table[g.arrows[a].src]) {
        g.inverse_table[a] = b;
      }
    }
  }
  return g;
}

}  // namespace xcrs
