#include "xcrs/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace xcrs {

namespace {

std::string arrow_str(FiniteGroupoid const& g, int a) {
  if (a >= 0 && a < static_cast<int>(g.arrow_names.size())) {
    return g.arrow_names[a];
  }
  return "#" + std::to_string(a);
}

}  // namespace

std::vector<int> FiniteGroupoid::hom(int u, int v) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a) {
    if (arrows[a].src == u && arrows[a].dst == v) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<int> FiniteGroupoid::star(int x) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a) {
    if (arrows[a].src == x) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<int> FiniteGroupoid::vertex_group_arrows(int x) const {
  auto out = hom(x, x);
  std::stable_partition(out.begin(), out.end(),
                        [&](int a) { return a == identity(x); });
  return out;
}

FiniteGroup FiniteGroupoid::vertex_group(int x, std::vector<int>* arrows_out) const {
  auto const         elems = vertex_group_arrows(x);
  std::map<int, int> local;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    local[elems[i]] = static_cast<int>(i);
  }
  int const                     n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string>      names;
  for (int i = 0; i < n; ++i) {
    names.push_back(arrow_names[elems[i]]);
    for (int j = 0; j < n; ++j) {
      t[i][j] = local.at(compose(elems[i], elems[j]));
    }
  }
  if (arrows_out) {
    *arrows_out = elems;
  }
  return FiniteGroup(std::move(t), std::move(names));
}

std::vector<int> FiniteGroupoid::components() const {
  std::vector<int> comp(num_objects(), -1);
  int              next = 0;
  for (int s = 0; s < num_objects(); ++s) {
    if (comp[s] >= 0) {
      continue;
    }
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto const& a : arrows) {
        for (auto [p, q] : {std::pair{a.src, a.dst}, std::pair{a.dst, a.src}}) {
          if (p == u && comp[q] < 0) {
            comp[q] = next;
            stack.push_back(q);
          }
        }
      }
    }
    ++next;
  }
  return comp;
}

bool FiniteGroupoid::is_connected() const {
  auto c = components();
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

int FiniteGroupoid::object_index(std::string const& name) const {
  auto it = std::find(object_names.begin(), object_names.end(), name);
  return it == object_names.end() ? -1 : static_cast<int>(it - object_names.begin());
}

int FiniteGroupoid::arrow_index(std::string const& name) const {
  auto it = std::find(arrow_names.begin(), arrow_names.end(), name);
  return it == arrow_names.end() ? -1 : static_cast<int>(it - arrow_names.begin());
}

FiniteGroupoid FiniteGroupoid::from_group(FiniteGroup const& g,
                                          std::string const& object) {
  std::vector<Arrow>       arrows(g.order(), Arrow{0, 0});
  std::vector<std::string> names;
  // identity first so that it reads as the canonical first arrow
  std::vector<int> order;
  order.push_back(g.identity());
  for (int a = 0; a < g.order(); ++a) {
    if (a != g.identity()) {
      order.push_back(a);
    }
  }
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) {
    pos[order[i]] = i;
    names.push_back(g.name(order[i]));
  }
  return build({object}, std::move(names), std::move(arrows),
               [&](int a, int b) { return pos[g.mul(order[a], order[b])]; });
}

FiniteGroupoid FiniteGroupoid::indiscrete(int n) {
  std::vector<std::string> objects, names;
  std::vector<Arrow>       arrows;
  for (int u = 0; u < n; ++u) {
    objects.push_back("o" + std::to_string(u));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      arrows.push_back({u, v});
      names.push_back("a" + std::to_string(u) + std::to_string(v));
    }
  }
  return build(std::move(objects), std::move(names), std::move(arrows),
               [n](int a, int b) { return (a / n) * n + (b % n); });
}

FiniteGroupoid FiniteGroupoid::discrete(int n) {
  std::vector<std::string> objects, names;
  std::vector<Arrow>       arrows;
  for (int u = 0; u < n; ++u) {
    objects.push_back("o" + std::to_string(u));
    names.push_back("1_o" + std::to_string(u));
    arrows.push_back({u, u});
  }
  return build(std::move(objects), std::move(names), std::move(arrows),
               [](int a, int) { return a; });
}

Report check_groupoid_axioms(FiniteGroupoid const& g) {
  Report    r;
  int const n = g.num_objects();
  int const m = g.num_arrows();
  if (static_cast<int>(g.arrow_names.size()) != m) {
    r.malformed("arrow name count does not match arrow count");
  }
  if (g.compose_table.size() != static_cast<std::size_t>(m) * m) {
    r.malformed("composition table has wrong size");
  }
  if (static_cast<int>(g.inverse_table.size()) != m) {
    r.malformed("inverse table has wrong size");
  }
  if (static_cast<int>(g.identity_table.size()) != n) {
    r.malformed("identity table has wrong size");
  }
  if (!r.structurally_ok()) {
    return r;
  }
  for (int a = 0; a < m; ++a) {
    auto const& ar = g.arrows[a];
    if (ar.src < 0 || ar.src >= n || ar.dst < 0 || ar.dst >= n) {
      r.malformed("arrow " + arrow_str(g, a) + " has a dangling endpoint");
    }
    if (g.inverse_table[a] < 0 || g.inverse_table[a] >= m) {
      r.malformed("inverse of " + arrow_str(g, a) + " is a dangling arrow id");
    }
    for (int b = 0; b < m; ++b) {
      int c = g.compose_table[a * m + b];
      if (c < -1 || c >= m) {
        r.malformed("composite (" + arrow_str(g, a) + "," + arrow_str(g, b)
                    + ") is a dangling arrow id");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (g.identity_table[x] < 0 || g.identity_table[x] >= m) {
      r.malformed("identity of object " + g.object_names[x]
                  + " is a dangling arrow id");
    }
  }
  if (!r.structurally_ok()) {
    return r;
  }

  for (int a = 0; a < m && !r.saturated(); ++a) {
    for (int b = 0; b < m; ++b) {
      bool composable = g.dst(a) == g.src(b);
      int  c          = g.compose(a, b);
      if (composable != (c >= 0)) {
        r.fail("composition domain",
               "(" + arrow_str(g, a) + "," + arrow_str(g, b) + ")");
        continue;
      }
      if (c >= 0 && (g.src(c) != g.src(a) || g.dst(c) != g.dst(b))) {
        r.fail("composite endpoints",
               "(" + arrow_str(g, a) + "," + arrow_str(g, b) + ")");
      }
    }
  }
  if (!r.pass()) {
    return r;
  }
  for (int a = 0; a < m && !r.saturated(); ++a) {
    for (int b = 0; b < m; ++b) {
      if (g.dst(a) != g.src(b)) {
        continue;
      }
      int ab = g.compose(a, b);
      for (int c = 0; c < m; ++c) {
        if (g.dst(b) != g.src(c)) {
          continue;
        }
        if (g.compose(ab, c) != g.compose(a, g.compose(b, c))) {
          r.fail("associativity", "(" + arrow_str(g, a) + "," + arrow_str(g, b)
                                      + "," + arrow_str(g, c) + ")");
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    int e = g.identity(x);
    if (g.src(e) != x || g.dst(e) != x) {
      r.fail("identity endpoints", g.object_names[x]);
      continue;
    }
    for (int a = 0; a < m; ++a) {
      if ((g.src(a) == x && g.compose(e, a) != a)
          || (g.dst(a) == x && g.compose(a, e) != a)) {
        r.fail("identity law", g.object_names[x] + " with " + arrow_str(g, a));
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    int b = g.inverse(a);
    if (g.src(b) != g.dst(a) || g.dst(b) != g.src(a)
        || g.compose(a, b) != g.identity(g.src(a))
        || g.compose(b, a) != g.identity(g.dst(a))) {
      r.fail("inverse law", arrow_str(g, a));
    }
  }
  return r;
}

Report check_groupoid_morphism(FiniteGroupoid const& h, FiniteGroupoid const& g,
                               GroupoidMorphism const& p) {
  Report r;
  if (static_cast<int>(p.object_map.size()) != h.num_objects()
      || static_cast<int>(p.arrow_map.size()) != h.num_arrows()) {
    r.malformed("morphism tables do not match the source");
    return r;
  }
  for (int o : p.object_map) {
    if (o < 0 || o >= g.num_objects()) {
      r.malformed("object image is dangling");
      return r;
    }
  }
  for (int a : p.arrow_map) {
    if (a < 0 || a >= g.num_arrows()) {
      r.malformed("arrow image is dangling");
      return r;
    }
  }
  for (int a = 0; a < h.num_arrows(); ++a) {
    int pa = p.arrow_map[a];
    if (g.src(pa) != p.object_map[h.src(a)] || g.dst(pa) != p.object_map[h.dst(a)]) {
      r.fail("preserves endpoints", h.arrow_names[a]);
    }
    if (p.arrow_map[h.inverse(a)] != g.inverse(pa)) {
      r.fail("preserves inverses", h.arrow_names[a]);
    }
  }
  for (int x = 0; x < h.num_objects(); ++x) {
    if (p.arrow_map[h.identity(x)] != g.identity(p.object_map[x])) {
      r.fail("preserves identities", h.object_names[x]);
    }
  }
  if (!r.pass()) {
    return r;
  }
  for (int a = 0; a < h.num_arrows() && !r.saturated(); ++a) {
    for (int b = 0; b < h.num_arrows(); ++b) {
      int c = h.compose(a, b);
      if (c >= 0 && p.arrow_map[c] != g.compose(p.arrow_map[a], p.arrow_map[b])) {
        r.fail("preserves composition", "(" + h.arrow_names[a] + ","
                                            + h.arrow_names[b] + ")");
      }
    }
  }
  return r;
}

std::vector<int> costar(FiniteGroupoid const& g, int y) {
  if (y < 0 || y >= g.num_objects()) {
    throw DomainError("costar: unknown object id " + std::to_string(y));
  }
  std::vector<int> out;
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (g.dst(a) == y) {
      out.push_back(a);
    }
  }
  return out;
}

CoverClass is_covering_groupoid(FiniteGroupoid const& h, FiniteGroupoid const& g,
                                GroupoidMorphism const& p) {
  auto r = check_groupoid_morphism(h, g, p);
  if (!r.pass()) {
    throw DomainError("is_covering_groupoid: not a morphism\n" + r.to_string());
  }
  bool bijective = true;
  for (int y = 0; y < h.num_objects(); ++y) {
    auto const src = costar(h, y);
    auto const dst = costar(g, p.object_map[y]);
    std::set<int> image;
    for (int a : src) {
      image.insert(p.arrow_map[a]);
    }
    if (image.size() != dst.size()) {
      return CoverClass::neither;
    }
    if (src.size() != dst.size()) {
      bijective = false;
    }
  }
  return bijective ? CoverClass::covering : CoverClass::fibration_only;
}

GroupoidMorphism identity_morphism(FiniteGroupoid const& g) {
  GroupoidMorphism p;
  for (int x = 0; x < g.num_objects(); ++x) {
    p.object_map.push_back(x);
  }
  for (int a = 0; a < g.num_arrows(); ++a) {
    p.arrow_map.push_back(a);
  }
  return p;
}

GroupoidMorphism compose(GroupoidMorphism const& first,
                         GroupoidMorphism const& second) {
  GroupoidMorphism p;
  for (int o : first.object_map) {
    p.object_map.push_back(second.object_map.at(o));
  }
  for (int a : first.arrow_map) {
    p.arrow_map.push_back(second.arrow_map.at(a));
  }
  return p;
}

GroupoidCover universal_cover_groupoid(FiniteGroupoid const& g,
                                       CoverSpec const&      spec) {
  int const x = spec.basepoint;
  if (x < 0 || x >= g.num_objects()) {
    throw DomainError("universal_cover_groupoid: unknown basepoint");
  }
  if (!g.is_connected()) {
    throw DomainError("universal_cover_groupoid: groupoid is not connected");
  }
  std::set<int> m(spec.subgroup.begin(), spec.subgroup.end());
  if (!m.count(g.identity(x))) {
    throw DomainError("universal_cover_groupoid: subgroup lacks the identity");
  }
  for (int a : m) {
    if (a < 0 || a >= g.num_arrows() || g.src(a) != x || g.dst(a) != x) {
      throw DomainError("universal_cover_groupoid: subgroup element "
                        + arrow_str(g, a) + " is not in the vertex group");
    }
    if (!m.count(g.inverse(a))) {
      throw DomainError("universal_cover_groupoid: not closed under inverse at "
                        + arrow_str(g, a));
    }
    for (int b : m) {
      if (!m.count(g.compose(a, b))) {
        throw DomainError("universal_cover_groupoid: not closed under product ("
                          + arrow_str(g, a) + "," + arrow_str(g, b) + ")");
      }
    }
  }

  // objects: right cosets M g, g in Star(x)
  int const        arrows = g.num_arrows();
  std::vector<int> coset_of(arrows, -1);  // star arrow -> cover object
  GroupoidCover    out;
  std::vector<int> per_object_count(g.num_objects(), 0);
  std::vector<int> index_over;  // cover object -> index among those over dst
  for (int s : g.star(x)) {
    if (coset_of[s] >= 0) {
      continue;
    }
    int const obj = static_cast<int>(out.coset_representative.size());
    out.coset_representative.push_back(s);
    for (int mm : m) {
      coset_of[g.compose(mm, s)] = obj;
    }
    int const u = g.dst(s);
    index_over.push_back(per_object_count[u]++);
    out.cover.object_names.push_back(g.object_names[u] + "~"
                                     + std::to_string(index_over.back()));
    out.projection.object_map.push_back(u);
  }
  int const n_obj = static_cast<int>(out.coset_representative.size());

  // arrows: (object o, arrow a with src(a) == over(o))
  std::vector<std::pair<int, int>> cover_arrows;
  std::map<std::pair<int, int>, int> arrow_id;
  std::vector<Arrow>       carrows;
  std::vector<std::string> names;
  for (int o = 0; o < n_obj; ++o) {
    int const rep = out.coset_representative[o];
    for (int a : g.star(g.dst(rep))) {
      arrow_id[{o, a}] = static_cast<int>(carrows.size());
      cover_arrows.push_back({o, a});
      carrows.push_back({o, coset_of[g.compose(rep, a)]});
      names.push_back(g.arrow_names[a] + "~" + std::to_string(index_over[o]));
      out.projection.arrow_map.push_back(a);
    }
  }
  auto names_copy = out.cover.object_names;
  out.cover = FiniteGroupoid::build(
      std::move(names_copy), std::move(names), std::move(carrows),
      [&](int p, int q) {
        auto [o, a] = cover_arrows[p];
        auto [o2, b] = cover_arrows[q];
        return arrow_id.at({o, g.compose(a, b)});
      });
  return out;
}

FiniteGroupoid quotient_by_normal_subgroupoid(
    FiniteGroupoid const& g, std::vector<std::vector<int>> const& kernel,
    GroupoidMorphism* projection) {
  int const n = g.num_objects();
  if (static_cast<int>(kernel.size()) != n) {
    throw DomainError("quotient: one subgroup per object required");
  }
  std::vector<std::set<int>> k(n);
  for (int x = 0; x < n; ++x) {
    k[x] = {kernel[x].begin(), kernel[x].end()};
    k[x].insert(g.identity(x));
    for (int a : k[x]) {
      if (a < 0 || a >= g.num_arrows() || g.src(a) != x || g.dst(a) != x) {
        throw DomainError("quotient: " + arrow_str(g, a)
                          + " is not in the vertex group at "
                          + g.object_names[x]);
      }
      for (int b : k[x]) {
        if (!k[x].count(g.compose(a, g.inverse(b)))) {
          throw DomainError("quotient: subgroup at " + g.object_names[x]
                            + " not closed, witness (" + arrow_str(g, a) + ","
                            + arrow_str(g, b) + ")");
        }
      }
    }
  }
  // stability: t^-1 K(src t) t == K(dst t)
  for (int t = 0; t < g.num_arrows(); ++t) {
    int u = g.src(t), w = g.dst(t);
    std::set<int> conj;
    for (int a : k[u]) {
      conj.insert(g.compose(g.compose(g.inverse(t), a), t));
    }
    if (conj != k[w]) {
      throw DomainError("quotient: kernel not normal/stable, witness arrow "
                        + arrow_str(g, t));
    }
  }
  int const        m = g.num_arrows();
  std::vector<int> cls(m, -1);
  std::vector<int> reps;
  for (int a = 0; a < m; ++a) {
    if (cls[a] >= 0) {
      continue;
    }
    int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int kk : k[g.src(a)]) {
      cls[g.compose(kk, a)] = c;
    }
  }
  std::vector<Arrow>       arrows;
  std::vector<std::string> names;
  for (int r : reps) {
    arrows.push_back(g.arrows[r]);
    names.push_back(g.arrow_names[r]);
  }
  auto q = FiniteGroupoid::build(
      g.object_names, std::move(names), std::move(arrows),
      [&](int a, int b) { return cls[g.compose(reps[a], reps[b])]; });
  if (projection) {
    projection->object_map.clear();
    for (int x = 0; x < n; ++x) {
      projection->object_map.push_back(x);
    }
    projection->arrow_map = cls;
  }
  return q;
}

}  // namespace xcrs
