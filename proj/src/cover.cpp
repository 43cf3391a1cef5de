#include "xcrs/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace xcrs {

SpanningTree spanning_tree(Graph const& g, int root) {
  if (root < 0 || root >= g.num_vertices()) {
    throw DomainError("spanning tree: unknown root vertex");
  }
  SpanningTree t;
  t.root = root;
  t.reached.assign(g.num_vertices(), false);
  t.path.assign(g.num_vertices(), Word{});
  t.generator.assign(g.num_edges(), -1);
  std::vector<bool> tree_edge(g.num_edges(), false);
  std::deque<int>   queue{root};
  t.reached[root] = true;
  t.path[root]    = identity_word(root);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.num_edges(); ++e) {
      auto const& ed = g.edges[e];
      if (ed.src == u && !t.reached[ed.dst]) {
        t.reached[ed.dst] = true;
        t.path[ed.dst]    = concat(g, t.path[u], edge_word(g, e));
        tree_edge[e]      = true;
        queue.push_back(ed.dst);
      } else if (ed.dst == u && !t.reached[ed.src]) {
        t.reached[ed.src] = true;
        t.path[ed.src]    = concat(g, t.path[u], edge_word(g, e, true));
        tree_edge[e]      = true;
        queue.push_back(ed.src);
      }
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!tree_edge[e] && t.reached[g.edges[e].src]) {
      t.generator[e] = static_cast<int>(t.generator_edge.size());
      t.generator_edge.push_back(e);
    }
  }
  return t;
}

std::vector<int> tree_word(SpanningTree const& t, Word const& w) {
  std::vector<int> out;
  for (auto l : w.letters) {
    int k = t.generator.at(l.edge);
    if (k >= 0) {
      out.push_back(l.inverse ? -(k + 1) : k + 1);
    }
  }
  return out;
}

Presentation fundamental_presentation(CrossedComplex const& c, SpanningTree const& t) {
  Presentation p;
  p.generators = static_cast<int>(t.generator_edge.size());
  if (c.dim >= 2) {
    auto const& l = c.basis(2);
    for (int b = 0; b < l.size(); ++b) {
      if (t.reached[l.base[b]]) {
        p.relators.push_back(tree_word(t, std::get<Word>(l.boundary[b])));
      }
    }
  }
  return p;
}

// --- lifting in free covers ----------------------------------------------------

Word lift_word_from(Cover const& cv, Graph const& base, Word const& w, int start) {
  int const k = cv.index();
  if (start / k != w.start) {
    throw DomainError("path lifting: start vertex is not over the word's start");
  }
  word_end(base, w);
  Word out{start, {}};
  int  coset = start % k;
  for (auto l : w.letters) {
    int gen = cv.tree.generator.at(l.edge);
    if (!l.inverse) {
      out.letters.push_back({l.edge * k + coset, false});
      coset = gen < 0 ? coset : cv.cosets.act(coset, gen + 1);
    } else {
      coset = gen < 0 ? coset : cv.cosets.act(coset, -(gen + 1));
      out.letters.push_back({l.edge * k + coset, true});
    }
  }
  return out;
}

Word lift_word_to(Cover const& cv, Graph const& base, Word const& w, int end) {
  auto const& g = cv.complex.graph;
  return inverse(g, lift_word_from(cv, base, inverse(base, w), end));
}

Elem2 lift_elem2(Cover const& cv, CrossedComplex const& base, Elem2 const& a, int at) {
  int const k = cv.index();
  if (at / k != a.base) {
    throw DomainError("element lifting: vertex is not over the element's base");
  }
  Elem2 out{at, {}};
  for (auto const& t : a.terms) {
    Word lt = lift_word_to(cv, base.graph, t.transport, at);
    out.terms.push_back({t.basis * k + lt.start % k, std::move(lt), t.inverse});
  }
  return out;
}

ChainElem lift_chain(Cover const& cv, CrossedComplex const& base, int n,
                     ChainElem const& a, int at) {
  (void)n;
  int const k = cv.index();
  if (at / k != a.base) {
    throw DomainError("element lifting: vertex is not over the element's base");
  }
  ChainElem out{at, {}};
  for (auto const& t : a.terms) {
    Word lt = lift_word_to(cv, base.graph, t.transport, at);
    out.terms.push_back({t.coef, t.basis * k + lt.start % k, std::move(lt)});
  }
  return chain_normalize(std::move(out));
}

namespace {

Cover free_cover(CrossedComplex const& c, int x, Pi1Subgroup const& m,
                 std::size_t bound) {
  Cover cv;
  cv.tree = spanning_tree(c.graph, x);
  auto const p = fundamental_presentation(c, cv.tree);
  std::vector<std::vector<int>> gens;
  if (m.all) {
    for (int k = 1; k <= p.generators; ++k) {
      gens.push_back({k});
    }
  } else {
    for (auto const& w : m.loops) {
      if (w.start != x || word_end(c.graph, w) != x) {
        throw DomainError("subgroup generator " + to_string(c.graph, w)
                          + " is not a loop at the basepoint");
      }
      gens.push_back(tree_word(cv.tree, w));
    }
  }
  cv.cosets   = enumerate_cosets(p, gens, bound);
  int const k = cv.index();

  CrossedComplex& out = cv.complex;
  out.regime          = Regime::free;
  out.dim             = c.dim;
  for (int u = 0; u < c.graph.num_vertices(); ++u) {
    for (int i = 0; i < k; ++i) {
      out.graph.vertex_names.push_back(c.graph.vertex_names[u] + "~" + std::to_string(i));
      cv.projection.object_map.push_back(u);
    }
  }
  cv.projection.cells.resize(c.dim);
  for (int e = 0; e < c.graph.num_edges(); ++e) {
    auto const& ed  = c.graph.edges[e];
    int const   gen = cv.tree.generator[e];
    for (int i = 0; i < k; ++i) {
      int j = gen < 0 ? i : cv.cosets.act(i, gen + 1);
      out.graph.edges.push_back(
          {ed.src * k + i, ed.dst * k + j, ed.name + "~" + std::to_string(i)});
      cv.projection.cells[0].push_back(edge_word(c.graph, e));
    }
  }
  for (int n = 2; n <= c.dim; ++n) {
    auto const& l = c.basis(n);
    FreeLayer   nl;
    for (int b = 0; b < l.size(); ++b) {
      for (int i = 0; i < k; ++i) {
        int const at = l.base[b] * k + i;
        nl.names.push_back(l.names[b] + "~" + std::to_string(i));
        nl.base.push_back(at);
        if (n == 2) {
          Word w = lift_word_from(cv, c.graph, std::get<Word>(l.boundary[b]), at);
          if (word_end(out.graph, w) != at) {
            throw DomainError("cover: lifted boundary of " + l.names[b]
                              + " does not close; relator not in the kernel");
          }
          nl.boundary.emplace_back(std::move(w));
          cv.projection.cells[1].emplace_back(elem2_generator(c, b));
        } else if (n == 3) {
          nl.boundary.emplace_back(lift_elem2(cv, c, std::get<Elem2>(l.boundary[b]), at));
          cv.projection.cells[2].emplace_back(chain_generator(c, 3, b));
        } else {
          nl.boundary.emplace_back(
              lift_chain(cv, c, n - 1, std::get<ChainElem>(l.boundary[b]), at));
          cv.projection.cells[n - 1].emplace_back(chain_generator(c, n, b));
        }
      }
    }
    out.free.push_back(std::move(nl));
  }
  cv.base_lift = x * k;
  return cv;
}

Cover concrete_cover(CrossedComplex const& c, int x, Pi1Subgroup const& m) {
  GroupoidMorphism q;
  auto const       quotient = pi1_groupoid(c, &q);
  // M inside the vertex group of pi_1 at x
  std::set<int> mq{quotient.identity(x)};
  std::vector<int> gens;
  if (m.all) {
    gens = quotient.vertex_group_arrows(x);
  } else {
    for (int a : m.arrows) {
      if (a < 0 || a >= c.groupoid.num_arrows() || c.groupoid.src(a) != x
          || c.groupoid.dst(a) != x) {
        throw DomainError("subgroup generator is not a loop at the basepoint");
      }
      gens.push_back(q.arrow_map[a]);
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int a : std::vector<int>(mq.begin(), mq.end())) {
      for (int g : gens) {
        grew |= mq.insert(quotient.compose(a, g)).second;
      }
    }
  }
  CoverSpec spec{x, {}};
  for (int a : c.groupoid.vertex_group_arrows(x)) {
    if (mq.count(q.arrow_map[a])) {
      spec.subgroup.push_back(a);
    }
  }
  auto gc = universal_cover_groupoid(c.groupoid, spec);

  Cover cv;
  CrossedComplex& out = cv.complex;
  out.regime          = Regime::concrete;
  out.dim             = c.dim;
  out.groupoid        = gc.cover;
  auto const& proj    = gc.projection;
  std::map<std::pair<int, int>, int> lifted;  // (cover object, arrow) -> cover arrow
  for (int ca = 0; ca < out.groupoid.num_arrows(); ++ca) {
    lifted[{out.groupoid.src(ca), proj.arrow_map[ca]}] = ca;
  }
  cv.projection.object_map = proj.object_map;
  cv.projection.cells.resize(c.dim);
  for (int a : proj.arrow_map) {
    cv.projection.cells[0].emplace_back(a);
  }
  for (int n = 2; n <= c.dim; ++n) {
    auto const&   l = c.layer(n);
    ConcreteLayer nl;
    for (int o = 0; o < out.groupoid.num_objects(); ++o) {
      int u = proj.object_map[o];
      nl.groups.push_back(l.groups[u]);
      if (n == 2) {
        std::vector<int> b;
        for (int d : l.boundary[u]) {
          b.push_back(lifted.at({o, d}));
        }
        nl.boundary.push_back(std::move(b));
      } else {
        nl.boundary.push_back(l.boundary[u]);
      }
      for (int e = 0; e < l.groups[u].size(); ++e) {
        cv.projection.cells[n - 1].emplace_back(l.global(u, e));
      }
    }
    for (int ca = 0; ca < out.groupoid.num_arrows(); ++ca) {
      nl.action.push_back(l.action[proj.arrow_map[ca]]);
    }
    out.concrete.push_back(std::move(nl));
  }
  std::set<int> mset(spec.subgroup.begin(), spec.subgroup.end());
  for (int o = 0; o < out.groupoid.num_objects(); ++o) {
    if (proj.object_map[o] == x && mset.count(gc.coset_representative[o])) {
      cv.base_lift = o;
    }
  }
  return cv;
}

}  // namespace

Cover universal_cover(CrossedComplex const& c, int x, Pi1Subgroup const& m,
                      std::size_t bound) {
  if (x < 0 || x >= c.num_objects()) {
    throw DomainError("cover: unknown basepoint");
  }
  if (!c.is_connected()) {
    throw DomainError("cover: complex is not connected");
  }
  return c.regime == Regime::free ? free_cover(c, x, m, bound) : concrete_cover(c, x, m);
}

std::vector<Pi1Subgroup> pi1_subgroups(CrossedComplex const& c, int x, std::size_t bound) {
  if (x < 0 || x >= c.num_objects()) {
    throw DomainError("subgroups: unknown basepoint");
  }
  std::vector<Pi1Subgroup> out;
  if (c.regime == Regime::concrete) {
    // generated by the full preimage in C_1(x)
    GroupoidMorphism proj;
    auto const       quotient = pi1_groupoid(c, &proj);
    int const        qx       = proj.object_map[x];
    std::vector<int> qarrows;
    auto const       q = quotient.vertex_group(qx, &qarrows);
    for (auto const& sub : q.subgroups()) {
      std::set<int> image;
      for (int e : sub) {
        image.insert(qarrows[e]);
      }
      Pi1Subgroup m;
      for (int a : c.groupoid.vertex_group_arrows(x)) {
        if (image.count(proj.arrow_map[a])) {
          m.arrows.push_back(a);
        }
      }
      out.push_back(std::move(m));
    }
    return out;
  }
  auto const tree  = spanning_tree(c.graph, x);
  auto const table = enumerate_cosets(fundamental_presentation(c, tree), {}, bound);
  auto const group = group_from_regular_table(table);
  std::vector<Word> generator_loop;
  for (int e : tree.generator_edge) {
    auto const& ed = c.graph.edges[e];
    generator_loop.push_back(concat(c.graph, concat(c.graph, tree.path[ed.src], edge_word(c.graph, e)),
                                    inverse(c.graph, tree.path[ed.dst])));
  }
  for (auto const& sub : group.subgroups()) {
    Pi1Subgroup m;
    for (int g : sub) {
      Word loop = identity_word(x);
      for (int letter : table.representatives[g]) {
        auto const& l = generator_loop[std::abs(letter) - 1];
        loop = concat(c.graph, loop, letter > 0 ? l : inverse(c.graph, l));
      }
      m.loops.push_back(std::move(loop));
    }
    out.push_back(std::move(m));
  }
  return out;
}

ChainImage::ChainImage(CrossedComplex const& c, std::size_t bound)
    : base_(&c), cover_(universal_cover(c, 0, Pi1Subgroup{}, bound)) {}

std::map<int, long> ChainImage::of(Elem2 const& a) const {
  std::map<int, long> out;
  for (auto const& t : lift_elem2(cover_, *base_, a, cover_.vertex(a.base, 0)).terms) {
    out[t.basis] += t.inverse ? -1 : 1;
  }
  std::erase_if(out, [](auto const& kv) { return kv.second == 0; });
  return out;
}

std::map<int, long> ChainImage::of(int n, ChainElem const& a) const {
  std::map<int, long> out;
  for (auto const& t : lift_chain(cover_, *base_, n, a, cover_.vertex(a.base, 0)).terms) {
    out[t.basis] += t.coef;
  }
  std::erase_if(out, [](auto const& kv) { return kv.second == 0; });
  return out;
}

}  // namespace xcrs
