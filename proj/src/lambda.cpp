#include <algorithm>
#include <array>
#include <stdexcept>
#include <map>
#include <string>
#include <vector>

#include "xcrs/catalogue.hpp"
#include "xcrs/cubical.hpp"

namespace xcrs {
namespace {

// Composable pairs above this count keep lambda at dimension 2.
constexpr long pair_budget = 400000;

ConcreteLayer trivial_layer(CrossedComplex const& c, int n) {
  ConcreteLayer l;
  int const     objects = c.groupoid.num_objects();
  for (int p = 0; p < objects; ++p) {
    l.groups.push_back({{"1"}, {{0}}});
    l.boundary.push_back({n == 2 ? c.groupoid.identity(p) : c.layer(n - 1).groups[p].identity()});
  }
  l.action.assign(c.groupoid.num_arrows(), {0});
  return l;
}

CrossedComplex padded(CrossedComplex c) {
  if (c.regime != Regime::concrete) {
    throw DomainError("lambda needs a concrete complex");
  }
  c.concrete.resize(std::min<std::size_t>(c.concrete.size(), max_cubical_dim - 1));
  while (c.dim < max_cubical_dim) {
    ++c.dim;
    c.concrete.push_back(trivial_layer(c, c.dim));
  }
  c.dim = max_cubical_dim;
  return c;
}

// Arithmetic on global element ids of a concrete complex.
struct Arith {
  CrossedComplex const& c;

  int mul(int n, int g, int h) const {
    auto const& l = c.layer(n);
    auto [p, a]   = l.locate(g);
    auto [q, b]   = l.locate(h);
    if (p != q) {
      throw std::logic_error("lambda: product across objects");
    }
    return l.global(p, l.groups[p].mul[a][b]);
  }
  int inverse(int n, int g) const {
    auto const& l = c.layer(n);
    auto [p, a]   = l.locate(g);
    return l.global(p, l.groups[p].inverse(a));
  }
  int act(int n, int g, int arrow) const {
    auto const& l = c.layer(n);
    auto [p, a]   = l.locate(g);
    if (c.groupoid.src(arrow) != p) {
      throw std::logic_error("lambda: action by a non-adjacent arrow");
    }
    return l.global(c.groupoid.dst(arrow), l.action[arrow][a]);
  }
  int identity(int n, int obj) const {
    if (n == 0) {
      return obj;
    }
    if (n == 1) {
      return c.groupoid.identity(obj);
    }
    auto const& l = c.layer(n);
    return l.global(obj, l.groups[obj].identity());
  }
  bool is_identity(int n, int g) const {
    auto [p, a] = c.layer(n).locate(g);
    return a == c.layer(n).groups[p].identity();
  }
};

int cell_dim(std::string const& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), 'I'));
}

std::string corner(std::string s) {
  std::replace(s.begin(), s.end(), 'I', '1');
  return s;
}

// Cells of the n-cube in generator order: vertices, edges, squares, cube.
struct Shape {
  int                        n = 0;
  CrossedComplex             cube;
  std::vector<std::string>   cells;
  std::map<std::string, int> index;
  int                        offset[5] = {0, 0, 0, 0, 0};

  explicit Shape(int dim) : n(dim), cube(cube_complex(dim)) {
    if (n == 0) {
      cells = {""};
    } else {
      cells = cube.graph.vertex_names;
      offset[1] = static_cast<int>(cells.size());
      for (auto const& e : cube.graph.edges) {
        cells.push_back(e.name);
      }
      for (int d = 2; d <= n; ++d) {
        offset[d] = static_cast<int>(cells.size());
        for (auto const& s : cube.basis(d).names) {
          cells.push_back(s);
        }
      }
    }
    offset[n + 1] = static_cast<int>(cells.size());
    for (int k = 0; k < static_cast<int>(cells.size()); ++k) {
      index[cells[k]] = k;
    }
  }
  int at(std::string const& s) const { return index.at(s); }
  int size() const { return static_cast<int>(cells.size()); }
};

using Cells = std::vector<int>;

class LambdaBuilder {
 public:
  LambdaBuilder(CrossedComplex const& c, int cube_cap)
      : c_(padded(c)), ar_{c_}, cap_(cube_cap) {
    for (int n = 0; n <= max_cubical_dim; ++n) {
      shapes_.emplace_back(n);
    }
    auto const& l2 = c_.layer(2);
    for (int p = 0; p < c_.num_objects(); ++p) {
      for (int e = 0; e < l2.groups[p].size(); ++e) {
        over2_[{p, l2.boundary[p][e]}].push_back(l2.global(p, e));
      }
      auto const& l3 = c_.layer(3);
      for (int e = 0; e < l3.groups[p].size(); ++e) {
        over3_[{p, l2.global(p, l3.boundary[p][e])}].push_back(l3.global(p, e));
      }
    }
  }

  LambdaObject build() {
    LambdaObject out;
    int          top = 2;
    for (int n = 0; n <= 2; ++n) {
      enumerate(n, -1);
    }
    if (enumerate(3, cap_)) {
      long pairs = 0;
      for (int i = 1; i <= 3; ++i) {
        std::map<Cells, std::array<long, 2>> per_face;
        for (auto const& x : elems_[3]) {
          ++per_face[face_cells(3, i, 0, x)][0];
          ++per_face[face_cells(3, i, 1, x)][1];
        }
        for (auto const& [f, k] : per_face) {
          pairs += k[0] * k[1];
        }
      }
      if (pairs <= pair_budget) {
        top = 3;
      }
    }
    if (top < 3) {
      elems_[3].clear();
    }
    auto& k = out.cubes;
    k.top   = top;
    for (int n = 0; n <= top; ++n) {
      k.sizes[n] = static_cast<int>(elems_[n].size());
    }
    for (int n = 1; n <= top; ++n) {
      k.faces[n].resize(n);
      k.negatives[n].resize(n);
      k.compositions[n].resize(n);
      for (int i = 1; i <= n; ++i) {
        for (int s = 0; s < 2; ++s) {
          for (auto const& x : elems_[n]) {
            k.faces[n][i - 1][s].push_back(lookup(n - 1, face_cells(n, i, s, x)));
          }
        }
        for (auto const& x : elems_[n]) {
          k.negatives[n][i - 1].push_back(lookup(n, negative_cells(n, i, x)));
        }
      }
    }
    for (int n = 0; n < top; ++n) {
      k.degeneracies[n].resize(n + 1);
      for (int i = 1; i <= n + 1; ++i) {
        for (auto const& x : elems_[n]) {
          k.degeneracies[n][i - 1].push_back(lookup(n + 1, degeneracy_cells(n, i, x)));
        }
      }
      if (n >= 1) {
        k.connections[n].resize(n);
        for (int i = 1; i <= n; ++i) {
          for (int s = 0; s < 2; ++s) {
            for (auto const& x : elems_[n]) {
              k.connections[n][i - 1][s].push_back(lookup(n + 1, connection_cells(n, i, s, x)));
            }
          }
        }
      }
    }
    for (int n = 1; n <= top; ++n) {
      for (int i = 1; i <= n; ++i) {
        std::map<int, std::vector<int>> by_lower;
        for (int y = 0; y < k.sizes[n]; ++y) {
          by_lower[k.face(n, i, 0, y)].push_back(y);
        }
        auto& table = k.compositions[n][i - 1];
        for (int x = 0; x < k.sizes[n]; ++x) {
          auto it = by_lower.find(k.face(n, i, 1, x));
          if (it == by_lower.end()) {
            continue;
          }
          for (int y : it->second) {
            table[CubicalObject::pair_key(x, y)] =
                lookup(n, compose_cells(n, i, elems_[n][x], elems_[n][y]));
          }
        }
      }
    }
    for (int n = 2; n <= top; ++n) {
      auto const& sh = shapes_[n];
      for (auto const& x : elems_[n]) {
        k.thin[n].push_back(ar_.is_identity(n, x[sh.offset[n]]));
      }
    }
    for (int n = 0; n <= top; ++n) {
      out.cells[n] = elems_[n];
    }
    return out;
  }

 private:
  // Morphisms from the n-cube into C by backtracking: vertices and edges
  // along a spanning order, then squares and the cube over their shells.
  bool enumerate(int n, int cap) {
    auto const& sh = shapes_[n];
    auto&       out = elems_[n];
    if (n == 0) {
      for (int p = 0; p < c_.num_objects(); ++p) {
        out.push_back({p});
      }
      index_[0].clear();
      for (int k = 0; k < static_cast<int>(out.size()); ++k) {
        index_[0][out[k]] = k;
      }
      return true;
    }
    auto const&      g     = sh.cube.graph;
    int const        verts = sh.offset[1];
    std::vector<int> edge_order;
    std::vector<bool> seen(verts, false), used(g.edges.size(), false);
    seen[0] = true;
    while (edge_order.size() < g.edges.size()) {
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (!used[e] && (seen[g.edges[e].src] || seen[g.edges[e].dst])) {
          used[e] = true;
          edge_order.push_back(e);
          seen[g.edges[e].src] = seen[g.edges[e].dst] = true;
          break;
        }
      }
    }
    // squares whose shell is fully assigned once edge_order[step] is set
    std::vector<std::vector<int>> closes(edge_order.size());
    if (n >= 2) {
      std::vector<int> when(g.edges.size());
      for (std::size_t k = 0; k < edge_order.size(); ++k) {
        when[edge_order[k]] = static_cast<int>(k);
      }
      auto const& squares = sh.cube.basis(2);
      for (int b = 0; b < squares.size(); ++b) {
        int last = 0;
        for (auto const& letter : std::get<Word>(squares.boundary[b]).letters) {
          last = std::max(last, when[letter.edge]);
        }
        closes[last].push_back(b);
      }
    }
    CrossedMorphism fm;
    fm.object_map.assign(verts, -1);
    fm.cells.assign(n, {});
    fm.cells[0].assign(g.edges.size(), CellImage{0});
    for (int d = 2; d <= n; ++d) {
      fm.cells[d - 1].assign(sh.cube.basis(d).size(), CellImage{0});
    }
    bool overflow = false;
    auto const& grp = c_.groupoid;

    auto emit = [&] {
      Cells x(sh.size());
      for (int v = 0; v < verts; ++v) {
        x[v] = fm.object_map[v];
      }
      for (int d = 1; d <= n; ++d) {
        for (int k = sh.offset[d]; k < sh.offset[d + 1]; ++k) {
          x[k] = std::get<int>(fm.cells[d - 1][k - sh.offset[d]]);
        }
      }
      out.push_back(std::move(x));
      if (cap >= 0 && static_cast<int>(out.size()) > cap) {
        overflow = true;
      }
    };
    auto upper = [&](auto&& self, int d, int b) -> void {
      if (overflow) {
        return;
      }
      if (d > n) {
        emit();
        return;
      }
      if (b == sh.cube.basis(d).size()) {
        self(self, d + 1, 0);
        return;
      }
      auto const& layer = sh.cube.basis(d);
      int const   obj   = fm.object_map[layer.base[b]];
      std::vector<int> const* cands = nullptr;
      if (d == 2) {
        int shell = std::get<int>(apply_word(sh.cube, c_, fm, std::get<Word>(layer.boundary[b])));
        auto it   = over2_.find({obj, shell});
        cands     = it == over2_.end() ? nullptr : &it->second;
      } else {
        int shell = std::get<int>(apply_elem2(sh.cube, c_, fm, std::get<Elem2>(layer.boundary[b])));
        auto it   = over3_.find({obj, shell});
        cands     = it == over3_.end() ? nullptr : &it->second;
      }
      if (cands == nullptr) {
        return;
      }
      for (int v : *cands) {
        fm.cells[d - 1][b] = v;
        self(self, d, b + 1);
      }
    };
    auto edges = [&](auto&& self, std::size_t step) -> void {
      if (overflow) {
        return;
      }
      if (step == edge_order.size()) {
        upper(upper, 2, 0);
        return;
      }
      int const e = edge_order[step];
      int const s = g.edges[e].src, t = g.edges[e].dst;
      for (int a = 0; a < grp.num_arrows(); ++a) {
        int const as = grp.src(a), at = grp.dst(a);
        if ((fm.object_map[s] >= 0 && fm.object_map[s] != as)
            || (fm.object_map[t] >= 0 && fm.object_map[t] != at)) {
          continue;
        }
        int const old_s = fm.object_map[s], old_t = fm.object_map[t];
        fm.object_map[s] = as;
        fm.object_map[t] = at;
        fm.cells[0][e]   = a;
        bool fillable    = true;
        for (int b : closes[step]) {
          auto const& squares = sh.cube.basis(2);
          int shell = std::get<int>(apply_word(sh.cube, c_, fm, std::get<Word>(squares.boundary[b])));
          if (!over2_.contains({fm.object_map[squares.base[b]], shell})) {
            fillable = false;
            break;
          }
        }
        if (fillable) {
          self(self, step + 1);
        }
        fm.object_map[s] = old_s;
        fm.object_map[t] = old_t;
      }
    };
    edges(edges, 0);
    if (overflow) {
      out.clear();
      return false;
    }
    std::sort(out.begin(), out.end());
    index_[n].clear();
    for (int k = 0; k < static_cast<int>(out.size()); ++k) {
      index_[n][out[k]] = k;
    }
    return true;
  }

  int lookup(int n, Cells const& x) const {
    auto it = index_[n].find(x);
    if (it == index_[n].end()) {
      throw std::logic_error("lambda: operator left the set of cube morphisms in dimension "
                             + std::to_string(n));
    }
    return it->second;
  }

  // x o phi for a monotone cube map phi from the m-cube to the n-cube; cells
  // squashed to lower dimension take the identity at their top corner.
  template <typename Phi>
  Cells precompose(int n, int m, Cells const& x, Phi&& phi) const {
    auto const& src = shapes_[m];
    auto const& tgt = shapes_[n];
    Cells       y(src.size());
    for (int k = 0; k < src.size(); ++k) {
      auto const& s   = src.cells[k];
      std::string img = phi(s);
      int const   d   = cell_dim(s);
      if (cell_dim(img) == d) {
        y[k] = x[tgt.at(img)];
      } else {
        y[k] = ar_.identity(d, x[tgt.at(phi(corner(s)))]);
      }
    }
    return y;
  }

  Cells face_cells(int n, int i, int sign, Cells const& x) const {
    return precompose(n, n - 1, x, [&](std::string s) {
      s.insert(s.begin() + (i - 1), sign == 0 ? '0' : '1');
      return s;
    });
  }

  Cells degeneracy_cells(int n, int i, Cells const& x) const {
    return precompose(n, n + 1, x, [&](std::string s) {
      s.erase(s.begin() + (i - 1));
      return s;
    });
  }

  // sign 0 merges coordinates i, i+1 by max, sign 1 by min.
  Cells connection_cells(int n, int i, int sign, Cells const& x) const {
    return precompose(n, n + 1, x, [&](std::string s) {
      char const a = s[i - 1], b = s[i];
      char const absorbing = sign == 0 ? '1' : '0';
      char const neutral   = sign == 0 ? '0' : '1';
      char       r         = 'I';
      if (a == absorbing || b == absorbing) {
        r = absorbing;
      } else if (a == neutral) {
        r = b;
      } else if (b == neutral) {
        r = a;
      }
      s.erase(s.begin() + i);
      s[i - 1] = r;
      return s;
    });
  }

  // Reflection of coordinate i: edges across it are inverted; higher cells
  // across it move to the new top corner along the reflected edge and are
  // inverted.
  Cells negative_cells(int n, int i, Cells const& x) const {
    auto const& sh = shapes_[n];
    Cells       y(sh.size());
    for (int k = 0; k < sh.size(); ++k) {
      std::string s = sh.cells[k];
      int const   d = cell_dim(s);
      if (s[i - 1] != 'I') {
        s[i - 1] = s[i - 1] == '0' ? '1' : '0';
        y[k]     = x[sh.at(s)];
      } else if (d == 1) {
        y[k] = c_.groupoid.inverse(x[k]);
      } else {
        std::string e = corner(s);
        e[i - 1]      = 'I';
        int const back = c_.groupoid.inverse(x[sh.at(e)]);
        y[k]           = ar_.inverse(d, ar_.act(d, x[k], back));
      }
    }
    return y;
  }

  Cells restrict_to(int n, Cells const& x, std::string const& cell) const {
    return precompose(n, cell_dim(cell), x, [&](std::string const& t) {
      std::string out = cell;
      std::size_t j   = 0;
      for (auto& ch : out) {
        if (ch == 'I') {
          ch = t[j++];
        }
      }
      return out;
    });
  }

  // Top value of x o_i y for cube assignments in dimension d.
  int compose_top(int d, int i, Cells const& x, Cells const& y) const {
    auto const& sh = shapes_[d];
    int const   xt = x.back(), yt = y.back();
    if (d == 1) {
      return c_.groupoid.compose(xt, yt);
    }
    std::string e(d, '1');
    e[i - 1] = 'I';
    int const along = y[sh.at(e)];
    if (d == 2 && i == 1) {
      return ar_.mul(2, yt, ar_.act(2, xt, along));
    }
    return ar_.mul(d, ar_.act(d, xt, along), yt);
  }

  Cells compose_cells(int n, int i, Cells const& x, Cells const& y) const {
    auto const& sh = shapes_[n];
    Cells       z(sh.size());
    for (int k = 0; k < sh.size(); ++k) {
      auto const& s = sh.cells[k];
      if (s[i - 1] == '0') {
        z[k] = x[k];
      } else if (s[i - 1] == '1') {
        z[k] = y[k];
      } else {
        int const dir = static_cast<int>(std::count(s.begin(), s.begin() + i, 'I'));
        z[k] = compose_top(cell_dim(s), dir, restrict_to(n, x, s), restrict_to(n, y, s));
      }
    }
    return z;
  }

  CrossedComplex                      c_;
  Arith                               ar_;
  int                                 cap_;
  std::vector<Shape>                  shapes_;
  std::map<std::pair<int, int>, std::vector<int>> over2_, over3_;
  std::array<std::vector<Cells>, 4>   elems_;
  std::array<std::map<Cells, int>, 4> index_;
};

}  // namespace

LambdaObject lambda_truncated(CrossedComplex const& c, int cube_cap) {
  return LambdaBuilder(c, cube_cap).build();
}

CubicalMap lambda_map(CrossedComplex const& src, LambdaObject const& ls,
                      CrossedComplex const& tgt, LambdaObject const& lt,
                      CrossedMorphism const& f) {
  if (src.regime != Regime::concrete || tgt.regime != Regime::concrete) {
    throw DomainError("lambda_map needs concrete complexes");
  }
  if (!check_crossed_morphism(src, tgt, f).pass()) {
    throw DomainError("lambda_map: not a crossed complex morphism");
  }
  int const  top = std::min(ls.cubes.top, lt.cubes.top);
  auto const t   = padded(tgt);
  CubicalMap out;
  for (int n = 0; n <= top; ++n) {
    Shape const shape(n);
    std::map<Cells, int> index;
    for (int k = 0; k < static_cast<int>(lt.cells[n].size()); ++k) {
      index[lt.cells[n][k]] = k;
    }
    for (auto const& x : ls.cells[n]) {
      Cells y(x.size());
      for (int k = 0; k < shape.size(); ++k) {
        int const d = cell_dim(shape.cells[k]);
        if (d == 0) {
          y[k] = f.object_map[x[k]];
        } else if (d <= src.dim) {
          y[k] = std::get<int>(f.cells[d - 1][x[k]]);
        } else {
          // a trivial source layer maps to the identity at the image object
          int const obj = f.object_map[x[shape.at(corner(shape.cells[k]))]];
          y[k]          = t.layer(d).global(obj, t.layer(d).groups[obj].identity());
        }
      }
      auto it = index.find(y);
      if (it == index.end()) {
        throw std::logic_error("lambda_map: image is not a cube morphism");
      }
      out.map[n].push_back(it->second);
    }
  }
  return out;
}

}  // namespace xcrs
