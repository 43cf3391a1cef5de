#include "xcrs/catalogue.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "xcrs/cover.hpp"
#include "xcrs/tensor.hpp"

namespace xcrs {

namespace {

// --- free builders ------------------------------------------------------------------

Word word_of(Graph const& g, std::vector<std::pair<std::string, bool>> const& letters, int start) {
  Word w{start, {}};
  for (auto const& [name, inv] : letters) {
    w.letters.push_back({g.edge_index(name), inv});
  }
  return w;
}

std::vector<std::string> cube_cells(int n, int free_coords) {
  std::vector<std::string> out;
  std::string              cell(n, '0');
  std::string const        alphabet = "01I";
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (std::count(cell.begin(), cell.end(), 'I') == free_coords) {
        out.push_back(cell);
      }
      return;
    }
    for (char c : alphabet) {
      cell[pos] = c;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Face of a cell: the k-th free coordinate (0-based) set to `side`.
std::string face(std::string cell, int k, char side) {
  for (auto& c : cell) {
    if (c == 'I' && k-- == 0) {
      c = side;
      break;
    }
  }
  return cell;
}

std::string corner(std::string cell) {
  std::replace(cell.begin(), cell.end(), 'I', '1');
  return cell;
}

// --- concrete builders --------------------------------------------------------------

GroupTable table_of(FiniteGroup const& g) {
  return GroupTable{g.names(), g.table()};
}

ConcreteLayer trivial_layer(FiniteGroupoid const& g, int n) {
  ConcreteLayer l;
  for (int p = 0; p < g.num_objects(); ++p) {
    l.groups.push_back(GroupTable{{"1"}, {{0}}});
    l.boundary.push_back({n == 2 ? g.identity(p) : 0});
  }
  l.action.assign(g.num_arrows(), {0});
  return l;
}

CrossedComplex groupoid_complex(FiniteGroupoid g, int dim) {
  CrossedComplex c;
  c.regime   = Regime::concrete;
  c.dim      = dim;
  c.groupoid = std::move(g);
  for (int n = 2; n <= dim; ++n) {
    c.concrete.push_back(trivial_layer(c.groupoid, n));
  }
  return c;
}

// One-object crossed module C2 -> C1 with C1 = `top` realised by from_group,
// which keeps element ids as arrow ids when the identity is element 0.
CrossedComplex crossed_module(FiniteGroup const& top, FiniteGroup const& fibre,
                              std::vector<int> const& boundary,
                              std::vector<std::vector<int>> const& action) {
  CrossedComplex c;
  c.regime   = Regime::concrete;
  c.dim      = 2;
  c.groupoid = FiniteGroupoid::from_group(top);
  ConcreteLayer l;
  l.groups.push_back(table_of(fibre));
  l.boundary.push_back(boundary);
  l.action = action;
  c.concrete.push_back(std::move(l));
  return c;
}

std::vector<int> parse_params(std::string const& key, std::string const& head,
                              std::size_t count) {
  std::vector<int>  out;
  std::stringstream ss(key.substr(head.size()));
  std::string       part;
  while (std::getline(ss, part, ':')) {
    int  v    = 0;
    auto res  = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
      throw DomainError("catalogue: bad parameter '" + part + "' in " + key);
    }
    out.push_back(v);
  }
  if (out.size() != count) {
    throw DomainError("catalogue: " + key + " needs " + std::to_string(count) + " parameter(s)");
  }
  return out;
}

void require(bool ok, std::string const& key) {
  if (!ok) {
    throw DomainError("catalogue: parameters out of range in " + key);
  }
}

}  // namespace

CrossedComplex point_complex() {
  CrossedComplex c;
  c.graph.vertex_names = {"pt"};
  return c;
}

CrossedComplex interval_complex() {
  return cube_complex(1);
}

CrossedComplex circle_complex() {
  CrossedComplex c;
  c.graph.vertex_names = {"v"};
  c.graph.edges        = {{0, 0, "a"}};
  return c;
}

CrossedComplex cube_complex(int n) {
  if (n < 0 || n > 3) {
    throw DomainError("catalogue: cube:n needs 0 <= n <= 3");
  }
  if (n == 0) {
    return point_complex();
  }
  CrossedComplex c;
  c.dim    = n;
  auto& g  = c.graph;
  g.vertex_names = cube_cells(n, 0);
  for (auto const& e : cube_cells(n, 1)) {
    g.edges.push_back({c.object_index(face(e, 0, '0')), c.object_index(face(e, 0, '1')), e});
  }
  auto edge = [&](std::string const& name, bool inv = false) {
    return std::pair<std::string, bool>{name, inv};
  };
  if (n >= 2) {
    FreeLayer l;
    for (auto const& sq : cube_cells(n, 2)) {
      // (d1+)^-1 (d2-)^-1 d1- d2+
      int const at = c.object_index(corner(sq));
      l.names.push_back(sq);
      l.base.push_back(at);
      l.boundary.emplace_back(word_of(g,
                                      {edge(face(sq, 0, '1'), true), edge(face(sq, 1, '0'), true),
                                       edge(face(sq, 0, '0')), edge(face(sq, 1, '1'))},
                                      at));
    }
    c.free.push_back(std::move(l));
  }
  if (n == 3) {
    auto const& squares = c.free[0];
    int const   top     = c.object_index("111");
    auto path = [&](std::vector<std::pair<std::string, bool>> letters, int end) {
      Word w = word_of(g, letters, 0);
      // start is the source of the first letter, or `end` when empty
      w.start = letters.empty() ? end : letter_src(g, w.letters.front());
      return w;
    };
    auto term = [&](std::string const& sq, Word transport, bool inv) {
      return Gen2{squares.index(sq), std::move(transport), inv};
    };
    Elem2 d{top, {}};
    d.terms.push_back(term("1II", identity_word(top), true));
    d.terms.push_back(term("0II", path({edge("I11")}, top), false));
    d.terms.push_back(term("II1", identity_word(top), true));
    d.terms.push_back(term("I0I", path({edge("1I1")}, top), true));
    d.terms.push_back(term("II0", path({edge("1I0", true), edge("10I"), edge("1I1")}, top), false));
    d.terms.push_back(term("I1I", path({edge("11I", true), edge("1I0", true), edge("10I"), edge("1I1")}, top),
                           false));
    FreeLayer l;
    l.names    = {"III"};
    l.base     = {top};
    l.boundary = {d};
    c.free.push_back(std::move(l));
  }
  return c;
}

CrossedComplex cyclic_resolution(int q, int n) {
  if (q < 1 || q > 6 || n < 1 || n > 4) {
    throw DomainError("catalogue: cyc:q:N needs 1 <= q <= 6 and 1 <= N <= 4");
  }
  CrossedComplex c;
  c.dim                = n;
  c.graph.vertex_names = {"v"};
  c.graph.edges        = {{0, 0, "x"}};
  Word const x         = edge_word(c.graph, 0);
  if (n >= 2) {
    Word xq = identity_word(0);
    for (int k = 0; k < q; ++k) {
      xq = concat(c.graph, xq, x);
    }
    c.free.push_back(FreeLayer{{"r"}, {0}, {xq}});
  }
  if (n >= 3) {
    Elem2 d{0, {Gen2{0, x, false}, Gen2{0, identity_word(0), true}}};
    c.free.push_back(FreeLayer{{"s"}, {0}, {d}});
  }
  if (n >= 4) {
    ChainElem d{0, {}};
    Word      power = identity_word(0);
    for (int k = 0; k < q; ++k) {
      d.terms.push_back({1, 0, power});
      power = concat(c.graph, power, x);
    }
    c.free.push_back(FreeLayer{{"t"}, {0}, {chain_normalize(d)}});
  }
  return c;
}

CrossedComplex catalogue(std::string const& key) {
  auto starts = [&](std::string const& head) { return key.rfind(head, 0) == 0; };
  if (key == "point") {
    return point_complex();
  }
  if (key == "interval") {
    return interval_complex();
  }
  if (key == "circle") {
    return circle_complex();
  }
  if (starts("cube:")) {
    int n = parse_params(key, "cube:", 1)[0];
    require(n >= 0 && n <= 3, key);
    return cube_complex(n);
  }
  if (starts("cyc:")) {
    auto p = parse_params(key, "cyc:", 2);
    require(p[0] >= 1 && p[0] <= 6 && p[1] >= 1 && p[1] <= 4, key);
    return cyclic_resolution(p[0], p[1]);
  }
  if (starts("torus:")) {
    int n = parse_params(key, "torus:", 1)[0];
    require(n >= 1 && n <= 2, key);
    return tensor_free(circle_complex(), circle_complex(), n).complex;
  }
  if (starts("cgrp:")) {
    int q = parse_params(key, "cgrp:", 1)[0];
    require(q >= 1 && q <= 8, key);
    return groupoid_complex(FiniteGroupoid::from_group(FiniteGroup::cyclic(q)), 2);
  }
  if (key == "s3") {
    return groupoid_complex(FiniteGroupoid::from_group(FiniteGroup::symmetric3()), 2);
  }
  if (key == "d4") {
    return groupoid_complex(FiniteGroupoid::from_group(FiniteGroup::dihedral(4)), 2);
  }
  if (key == "q8") {
    return groupoid_complex(FiniteGroupoid::from_group(FiniteGroup::quaternion()), 2);
  }
  if (key == "c2xc2") {
    auto c2 = FiniteGroup::cyclic(2);
    return groupoid_complex(FiniteGroupoid::from_group(FiniteGroup::direct_product(c2, c2)), 2);
  }
  if (starts("cind:")) {
    int n = parse_params(key, "cind:", 1)[0];
    require(n >= 1 && n <= 4, key);
    return groupoid_complex(FiniteGroupoid::indiscrete(n), 2);
  }
  if (starts("cxm:")) {
    auto p = parse_params(key, "cxm:", 3);
    int  k = p[0], q = p[1], s = p[2];
    require(k >= 1 && k <= 8 && q >= 1 && q <= 8 && s >= 0 && (s * k) % q == 0, key);
    std::vector<int> boundary;
    for (int c = 0; c < k; ++c) {
      boundary.push_back((s * c) % q);
    }
    std::vector<std::vector<int>> action(q);
    for (auto& row : action) {
      for (int c = 0; c < k; ++c) {
        row.push_back(c);
      }
    }
    return crossed_module(FiniteGroup::cyclic(q), FiniteGroup::cyclic(k), boundary, action);
  }
  if (starts("caut:")) {
    int k = parse_params(key, "caut:", 1)[0];
    require(k >= 1 && k <= 8, key);
    std::vector<std::vector<int>> action(2);
    for (int c = 0; c < k; ++c) {
      action[0].push_back(c);
      action[1].push_back((k - c) % k);
    }
    return crossed_module(FiniteGroup::cyclic(2), FiniteGroup::cyclic(k),
                          std::vector<int>(k, 0), action);
  }
  if (starts("cchain:")) {
    auto p = parse_params(key, "cchain:", 2);
    require(p[0] >= 1 && p[0] <= 8 && p[1] >= 1 && p[1] <= 8, key);
    auto c = groupoid_complex(FiniteGroupoid::from_group(FiniteGroup::trivial()), 3);
    c.concrete[0].groups[0] = table_of(FiniteGroup::cyclic(p[0]));
    c.concrete[0].boundary  = {std::vector<int>(p[0], 0)};
    c.concrete[0].action    = {[&] {
      std::vector<int> row(p[0]);
      for (int i = 0; i < p[0]; ++i) {
        row[i] = i;
      }
      return row;
    }()};
    c.concrete[1].groups[0] = table_of(FiniteGroup::cyclic(p[1]));
    c.concrete[1].boundary  = {std::vector<int>(p[1], 0)};
    c.concrete[1].action    = {[&] {
      std::vector<int> row(p[1]);
      for (int i = 0; i < p[1]; ++i) {
        row[i] = i;
      }
      return row;
    }()};
    return c;
  }
  throw DomainError("catalogue: unknown key '" + key + "'");
}

std::vector<std::string> catalogue_keys() {
  std::vector<std::string> keys = {"point", "interval", "circle", "cube:0", "cube:1",
                                   "cube:2", "cube:3", "torus:1", "torus:2"};
  for (int q = 1; q <= 6; ++q) {
    for (int n = 1; n <= 4; ++n) {
      keys.push_back("cyc:" + std::to_string(q) + ":" + std::to_string(n));
    }
  }
  auto concrete = concrete_catalogue_keys();
  keys.insert(keys.end(), concrete.begin(), concrete.end());
  return keys;
}

std::vector<std::string> concrete_catalogue_keys() {
  return {"cgrp:1",    "cgrp:2",    "cgrp:3",    "cgrp:4",   "cgrp:6",  "s3",
          "d4",        "q8",        "c2xc2",     "cind:2",   "cind:3",  "cxm:2:1:0",
          "cxm:4:1:0", "cxm:2:2:0", "cxm:2:4:2", "cxm:4:4:1", "caut:3", "cchain:4:2"};
}

// --- catalogue morphisms ------------------------------------------------------------

namespace {

CrossedMorphism concrete_map(std::vector<int> objects, std::vector<std::vector<int>> cells) {
  CrossedMorphism f;
  f.object_map = std::move(objects);
  for (auto& layer : cells) {
    std::vector<CellImage> images(layer.begin(), layer.end());
    f.cells.push_back(std::move(images));
  }
  return f;
}

}  // namespace

std::vector<CatalogueMorphism> concrete_catalogue_morphisms() {
  std::vector<CatalogueMorphism> out;
  for (auto const& key : concrete_catalogue_keys()) {
    auto c = catalogue(key);
    out.push_back({"id " + key, c, c, identity_morphism(c)});
  }
  for (std::string key : {"cgrp:2", "cgrp:4", "cgrp:6", "s3", "c2xc2", "cxm:2:4:2", "cxm:4:4:1",
                          "caut:3", "cind:2"}) {
    auto const c = catalogue(key);
    for (auto const& m : pi1_subgroups(c, 0)) {
      auto cover = universal_cover(c, 0, m);
      out.push_back({"cover " + key + " index " + std::to_string(cover.complex.num_objects()
                                                               / c.num_objects()),
                     cover.complex, c, cover.projection});
    }
  }
  {
    auto src = catalogue("cxm:4:1:0");
    auto tgt = catalogue("cxm:2:1:0");
    out.push_back({"collapse Z/4 -> Z/2", src, tgt,
                   concrete_map({0}, {{0}, {0, 1, 0, 1}})});
  }
  {
    auto src = catalogue("cgrp:4");
    auto tgt = catalogue("cgrp:2");
    out.push_back({"quotient C4 -> C2", src, tgt, concrete_map({0}, {{0, 1, 0, 1}, {0}})});
  }
  {
    auto src = catalogue("cgrp:1");
    auto tgt = catalogue("cgrp:2");
    out.push_back({"inclusion 1 -> C2", src, tgt, concrete_map({0}, {{0}, {0}})});
  }
  {
    auto src = catalogue("cxm:2:1:0");
    auto tgt = catalogue("cxm:4:1:0");
    out.push_back({"inclusion Z/2 -> Z/4", src, tgt, concrete_map({0}, {{0}, {0, 2}})});
  }
  return out;
}

}  // namespace xcrs
