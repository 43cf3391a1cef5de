#include "xcrs/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace xcrs {

namespace {

int generator_total(CrossedComplex const& c, int d) {
  if (d == 0) {
    return c.num_objects();
  }
  if (d == 1) {
    return c.graph.num_edges();
  }
  return c.basis(d).size();
}

std::string const& generator_name(CrossedComplex const& c, int d, int g) {
  if (d == 0) {
    return c.graph.vertex_names[g];
  }
  if (d == 1) {
    return c.graph.edges[g].name;
  }
  return c.basis(d).names[g];
}

// Final vertex: the vertex itself, the target of an edge, the base otherwise.
int final_vertex(CrossedComplex const& c, int d, int g) {
  if (d == 0) {
    return g;
  }
  if (d == 1) {
    return c.graph.edges[g].dst;
  }
  return c.basis(d).base[g];
}

class Builder {
 public:
  Builder(CrossedComplex const& a, CrossedComplex const& b, int n)
      : a_(a), b_(b), n_(std::min(n, max_tensor_dim)) {}

  TensorComplex build() {
    auto& c  = t_.complex;
    c.regime = Regime::free;
    c.dim    = std::max(n_, 1);
    t_.cells.resize(n_ + 1);
    t_.index.resize(n_ + 1);
    for (int k = 0; k <= n_; ++k) {
      for (int i = 0; i <= k; ++i) {
        if (i > a_.dim || k - i > b_.dim) {
          continue;
        }
        for (int x = 0; x < generator_total(a_, i); ++x) {
          for (int y = 0; y < generator_total(b_, k - i); ++y) {
            TensorCell cell{i, x, y};
            t_.index[k][cell] = static_cast<int>(t_.cells[k].size());
            t_.cells[k].push_back(cell);
          }
        }
      }
    }
    for (auto const& cell : t_.cells[0]) {
      c.graph.vertex_names.push_back(name(0, cell));
    }
    if (n_ >= 1) {
      for (auto const& cell : t_.cells[1]) {
        Edge e;
        if (cell.left_dim == 1) {
          auto const& ed = a_.graph.edges[cell.left];
          e              = {vertex(ed.src, cell.right), vertex(ed.dst, cell.right), name(1, cell)};
        } else {
          auto const& ed = b_.graph.edges[cell.right];
          e              = {vertex(cell.left, ed.src), vertex(cell.left, ed.dst), name(1, cell)};
        }
        c.graph.edges.push_back(std::move(e));
      }
    }
    for (int k = 2; k <= n_; ++k) {
      FreeLayer l;
      for (auto const& cell : t_.cells[k]) {
        l.names.push_back(name(k, cell));
        l.base.push_back(base(k, cell));
      }
      c.free.push_back(std::move(l));
    }
    for (int k = 2; k <= n_; ++k) {
      auto& l = c.free[k - 2];
      for (auto const& cell : t_.cells[k]) {
        l.boundary.push_back(boundary(k, cell));
      }
    }
    return std::move(t_);
  }

 private:
  std::string name(int k, TensorCell const& c) const {
    return generator_name(a_, c.left_dim, c.left) + "|"
           + generator_name(b_, k - c.left_dim, c.right);
  }

  int vertex(int u, int v) const { return u * b_.num_objects() + v; }

  int base(int k, TensorCell const& c) const {
    return vertex(final_vertex(a_, c.left_dim, c.left),
                  final_vertex(b_, k - c.left_dim, c.right));
  }

  Graph const& graph() const { return t_.complex.graph; }

  int id(int k, int left_dim, int x, int y) const { return t_.index[k].at({left_dim, x, y}); }

  // edge e (x) v and u (x) f as words
  Word left_edge(int e, int v, bool inv = false) const {
    return edge_word(graph(), id(1, 1, e, v), inv);
  }
  Word right_edge(int u, int f, bool inv = false) const {
    return edge_word(graph(), id(1, 0, u, f), inv);
  }

  Elem2 gen2(int left_dim, int x, int y) const {
    return elem2_generator(t_.complex, id(2, left_dim, x, y));
  }
  ChainElem gen(int k, int left_dim, int x, int y) const {
    return chain_generator(t_.complex, k, id(k, left_dim, x, y));
  }

  // --- factor element (x) vertex / vertex (x) factor element ------------------

  Word word_x_vertex(Word const& w, int v) const {
    Word out{vertex(w.start, v), {}};
    for (auto l : w.letters) {
      out.letters.push_back({id(1, 1, l.edge, v), l.inverse});
    }
    return out;
  }

  Word vertex_x_word(int u, Word const& w) const {
    Word out{vertex(u, w.start), {}};
    for (auto l : w.letters) {
      out.letters.push_back({id(1, 0, u, l.edge), l.inverse});
    }
    return out;
  }

  Elem2 elem2_x_vertex(Elem2 const& a, int v) const {
    Elem2 out{vertex(a.base, v), {}};
    for (auto const& t : a.terms) {
      out.terms.push_back({id(2, 2, t.basis, v), word_x_vertex(t.transport, v), t.inverse});
    }
    return out;
  }

  Elem2 vertex_x_elem2(int u, Elem2 const& a) const {
    Elem2 out{vertex(u, a.base), {}};
    for (auto const& t : a.terms) {
      out.terms.push_back({id(2, 0, u, t.basis), vertex_x_word(u, t.transport), t.inverse});
    }
    return out;
  }

  ChainElem chain_x_vertex(int d, ChainElem const& a, int v) const {
    ChainElem out{vertex(a.base, v), {}};
    for (auto const& t : a.terms) {
      out.terms.push_back({t.coef, id(d, d, t.basis, v), word_x_vertex(t.transport, v)});
    }
    return chain_normalize(std::move(out));
  }

  ChainElem vertex_x_chain(int u, int d, ChainElem const& a) const {
    ChainElem out{vertex(u, a.base), {}};
    for (auto const& t : a.terms) {
      out.terms.push_back({t.coef, id(d, 0, u, t.basis), vertex_x_word(u, t.transport)});
    }
    return chain_normalize(std::move(out));
  }

  // --- edge (x) word and word (x) edge in dimension 2 --------------------------

  // a (x) (u f) = (a (x) u)^(ta (x) f) . a (x) f;  a (x) e^-1 = ((a (x) e)^((ta (x) e)^-1))^-1
  Elem2 edge_x_word(int a, Word const& w) const {
    int const ta  = a_.graph.edges[a].dst;
    Elem2     out = elem2_identity(vertex(ta, w.start));
    for (auto l : w.letters) {
      Word step = right_edge(ta, l.edge, l.inverse);
      out       = elem2_act(graph(), out, step);
      Elem2 g   = gen2(1, a, l.edge);
      out       = elem2_mul(out, l.inverse ? elem2_inverse(elem2_act(graph(), g, step)) : g);
    }
    return out;
  }

  // (u f) (x) b = f (x) b . (u (x) b)^(f (x) tb);  e^-1 (x) b = ((e (x) b)^((e (x) tb)^-1))^-1
  Elem2 word_x_edge(Word const& w, int b) const {
    int const tb  = b_.graph.edges[b].dst;
    Elem2     out = elem2_identity(vertex(w.start, tb));
    for (auto l : w.letters) {
      Word  step = left_edge(l.edge, tb, l.inverse);
      Elem2 g    = gen2(1, l.edge, b);
      Elem2 head = l.inverse ? elem2_inverse(elem2_act(graph(), g, step)) : g;
      out        = elem2_mul(head, elem2_act(graph(), out, step));
    }
    return out;
  }

  // --- dimension-3 chains ---------------------------------------------------------

  // a (x) (g^w)^(+-1) = +-(a (x) g)^(ta (x) w)
  ChainElem edge_x_elem2(int a, Elem2 const& e) const {
    int const ta  = a_.graph.edges[a].dst;
    ChainElem out = chain_zero(vertex(ta, e.base));
    for (auto const& t : e.terms) {
      ChainElem g = chain_act(graph(), gen(3, 1, a, t.basis), vertex_x_word(ta, t.transport));
      out         = chain_add(out, chain_scale(g, t.inverse ? -1 : 1));
    }
    return out;
  }

  // (g^w)^(+-1) (x) b = +-(g (x) b)^(w (x) tb)
  ChainElem elem2_x_edge(Elem2 const& e, int b) const {
    int const tb  = b_.graph.edges[b].dst;
    ChainElem out = chain_zero(vertex(e.base, tb));
    for (auto const& t : e.terms) {
      ChainElem g = chain_act(graph(), gen(3, 2, t.basis, b), word_x_vertex(t.transport, tb));
      out         = chain_add(out, chain_scale(g, t.inverse ? -1 : 1));
    }
    return out;
  }

  // (u f) (x) d = f (x) d + (u (x) d)^(f (x) q);  e^-1 (x) d = -(e (x) d)^((e (x) q)^-1)
  ChainElem word_x_cell2(Word const& w, int d) const {
    int const q   = b_.basis(2).base[d];
    ChainElem out = chain_zero(vertex(w.start, q));
    for (auto l : w.letters) {
      Word      step = left_edge(l.edge, q, l.inverse);
      ChainElem g    = gen(3, 1, l.edge, d);
      out            = chain_act(graph(), out, step);
      out = chain_add(out, l.inverse ? chain_scale(chain_act(graph(), g, step), -1) : g);
    }
    return out;
  }

  // c (x) (u f) = (c (x) u)^(p (x) f) + c (x) f;  c (x) e^-1 = -(c (x) e)^((p (x) e)^-1)
  ChainElem cell2_x_word(int c, Word const& w) const {
    int const p   = a_.basis(2).base[c];
    ChainElem out = chain_zero(vertex(p, w.start));
    for (auto l : w.letters) {
      Word      step = right_edge(p, l.edge, l.inverse);
      ChainElem g    = gen(3, 2, c, l.edge);
      out            = chain_act(graph(), out, step);
      out = chain_add(out, l.inverse ? chain_scale(chain_act(graph(), g, step), -1) : g);
    }
    return out;
  }

  // --- boundaries ------------------------------------------------------------------

  FreeLayer::Boundary boundary(int k, TensorCell const& c) const {
    int const i = c.left_dim;
    int const j = k - i;
    if (j == 0) {
      auto const& db = a_.basis(k).boundary[c.left];
      if (k == 2) {
        return word_x_vertex(std::get<Word>(db), c.right);
      }
      if (k == 3) {
        return elem2_x_vertex(std::get<Elem2>(db), c.right);
      }
      return chain_x_vertex(k - 1, std::get<ChainElem>(db), c.right);
    }
    if (i == 0) {
      auto const& db = b_.basis(k).boundary[c.right];
      if (k == 2) {
        return vertex_x_word(c.left, std::get<Word>(db));
      }
      if (k == 3) {
        return vertex_x_elem2(c.left, std::get<Elem2>(db));
      }
      return vertex_x_chain(c.left, k - 1, std::get<ChainElem>(db));
    }
    if (k == 2) {
      return square(c.left, c.right);
    }
    if (k == 3) {
      return i == 1 ? edge_x_cell2(c.left, c.right) : cell2_x_edge(c.left, c.right);
    }
    if (i == 1) {
      return edge_x_cell3(c.left, c.right);
    }
    if (i == 3) {
      return cell3_x_edge(c.left, c.right);
    }
    return cell2_x_cell2(c.left, c.right);
  }

  // (ta (x) b)^-1 (a (x) sb)^-1 (sa (x) b) (a (x) tb)
  Word square(int a, int b) const {
    auto const& ea = a_.graph.edges[a];
    auto const& eb = b_.graph.edges[b];
    Word        w  = right_edge(ea.dst, b, true);
    w              = concat(graph(), w, left_edge(a, eb.src, true));
    w              = concat(graph(), w, right_edge(ea.src, b));
    return concat(graph(), w, left_edge(a, eb.dst));
  }

  // (ta (x) d)^-1 (sa (x) d)^(a (x) q) (a (x) delta d)^-1
  Elem2 edge_x_cell2(int a, int d) const {
    auto const& ea = a_.graph.edges[a];
    int const   q  = b_.basis(2).base[d];
    Elem2       out = elem2_inverse(gen2(0, ea.dst, d));
    out = elem2_mul(out, elem2_act(graph(), gen2(0, ea.src, d), left_edge(a, q)));
    return elem2_mul(out, elem2_inverse(edge_x_word(a, std::get<Word>(b_.basis(2).boundary[d]))));
  }

  // (c (x) tb)^-1 (c (x) sb)^(p (x) b) (delta c (x) b)
  Elem2 cell2_x_edge(int c, int b) const {
    auto const& eb = b_.graph.edges[b];
    int const   p  = a_.basis(2).base[c];
    Elem2       out = elem2_inverse(gen2(2, c, eb.dst));
    out = elem2_mul(out, elem2_act(graph(), gen2(2, c, eb.src), right_edge(p, b)));
    return elem2_mul(out, word_x_edge(std::get<Word>(a_.basis(2).boundary[c]), b));
  }

  // -(ta (x) d) + (sa (x) d)^(a (x) q) - a (x) delta d
  ChainElem edge_x_cell3(int a, int d) const {
    auto const& ea  = a_.graph.edges[a];
    int const   q   = b_.basis(3).base[d];
    ChainElem   out = chain_scale(gen(3, 0, ea.dst, d), -1);
    out = chain_add(out, chain_act(graph(), gen(3, 0, ea.src, d), left_edge(a, q)));
    return chain_add(out, chain_scale(edge_x_elem2(a, std::get<Elem2>(b_.basis(3).boundary[d])), -1));
  }

  // delta c (x) b + c (x) tb - (c (x) sb)^(p (x) b)
  ChainElem cell3_x_edge(int c, int b) const {
    auto const& eb  = b_.graph.edges[b];
    int const   p   = a_.basis(3).base[c];
    ChainElem   out = elem2_x_edge(std::get<Elem2>(a_.basis(3).boundary[c]), b);
    out = chain_add(out, gen(3, 3, c, eb.dst));
    return chain_add(out, chain_scale(chain_act(graph(), gen(3, 3, c, eb.src), right_edge(p, b)), -1));
  }

  // delta c (x) d + c (x) delta d
  ChainElem cell2_x_cell2(int c, int d) const {
    return chain_add(word_x_cell2(std::get<Word>(a_.basis(2).boundary[c]), d),
                     cell2_x_word(c, std::get<Word>(b_.basis(2).boundary[d])));
  }

  CrossedComplex const& a_;
  CrossedComplex const& b_;
  int                   n_;
  TensorComplex         t_;
};

int single_generator(CellImage const& img, int d) {
  if (d == 0) {
    return std::get<int>(img);
  }
  if (d == 1) {
    auto const& w = std::get<Word>(img);
    if (w.letters.size() != 1 || w.letters[0].inverse) {
      throw DomainError("tensor of morphisms: not a generator map");
    }
    return w.letters[0].edge;
  }
  if (d == 2) {
    auto const& e = std::get<Elem2>(img);
    if (e.terms.size() != 1 || e.terms[0].inverse || !e.terms[0].transport.empty()) {
      throw DomainError("tensor of morphisms: not a generator map");
    }
    return e.terms[0].basis;
  }
  auto const& e = std::get<ChainElem>(img);
  if (e.terms.size() != 1 || e.terms[0].coef != 1 || !e.terms[0].transport.empty()) {
    throw DomainError("tensor of morphisms: not a generator map");
  }
  return e.terms[0].basis;
}

int map_generator(CrossedMorphism const& f, int d, int g) {
  if (d == 0) {
    return f.object_map.at(g);
  }
  return single_generator(f.cells.at(d - 1).at(g), d);
}

}  // namespace

TensorComplex tensor_free(CrossedComplex const& a, CrossedComplex const& b, int n) {
  if (a.regime != Regime::free || b.regime != Regime::free) {
    throw DomainError("tensor: both factors must be free");
  }
  if (n < 0 || n > a.dim + b.dim) {
    throw DomainError("tensor: truncation " + std::to_string(n) + " exceeds the available "
                      + std::to_string(a.dim + b.dim));
  }
  return Builder(a, b, n).build();
}

CrossedMorphism tensor_generator_maps(TensorComplex const& src, TensorComplex const& tgt,
                                      CrossedMorphism const& f, CrossedMorphism const& g) {
  CrossedMorphism out;
  int const       top = static_cast<int>(src.cells.size()) - 1;
  out.cells.resize(src.complex.dim);
  for (int k = 0; k <= top; ++k) {
    for (auto const& c : src.cells[k]) {
      TensorCell image{c.left_dim, map_generator(f, c.left_dim, c.left),
                       map_generator(g, k - c.left_dim, c.right)};
      int const id = tgt.id(k, image);
      if (k == 0) {
        out.object_map.push_back(id);
      } else if (k == 1) {
        out.cells[0].emplace_back(edge_word(tgt.complex.graph, id));
      } else if (k == 2) {
        out.cells[1].emplace_back(elem2_generator(tgt.complex, id));
      } else {
        out.cells[k - 1].emplace_back(chain_generator(tgt.complex, k, id));
      }
    }
  }
  return out;
}

// --- certification ------------------------------------------------------------------

namespace {

// Index in pi_1(c, x) of the image of pi_1(d, y) under the free morphism f.
int image_index(CrossedComplex const& d, int y, CrossedComplex const& c, int x,
                CrossedMorphism const& f) {
  auto const tc    = spanning_tree(c.graph, x);
  auto const table = enumerate_cosets(fundamental_presentation(c, tc), {});
  auto const group = group_from_regular_table(table);
  auto const td    = spanning_tree(d.graph, y);
  std::vector<int> gens;
  for (int e : td.generator_edge) {
    auto const& ed   = d.graph.edges[e];
    Word        loop = concat(d.graph, concat(d.graph, td.path[ed.src], edge_word(d.graph, e)),
                              inverse(d.graph, td.path[ed.dst]));
    auto img = std::get<Word>(apply_word(d, c, f, loop));
    gens.push_back(table.trace(0, tree_word(tc, img)));
  }
  return group.order() / static_cast<int>(group.generated_subgroup(gens).size());
}

}  // namespace

bool TensorCoveringReport::pass() const {
  return classification == CoverClass::covering && pi1_matches && subgroup_matches
         && image_index == cover_index;
}

std::string TensorCoveringReport::to_string() const {
  std::ostringstream os;
  os << label << " classified " << xcrs::to_string(classification) << "\n";
  os << "pi1 of tensor = " << describe(pi1_tensor) << ", pi1 product = "
     << describe(pi1_product) << (pi1_matches ? " (isomorphic)" : " (NOT isomorphic)") << "\n";
  os << "pi1 of cover tensor = " << describe(pi1_cover_tensor) << ", M x pi1 = "
     << describe(subgroup_product) << (subgroup_matches ? " (isomorphic)" : " (NOT isomorphic)")
     << "\n";
  os << "index of image = " << image_index << ", index of cover subgroup = " << cover_index << "\n";
  return os.str();
}

namespace {

// Report for f (x) g : A' (x) B' -> A (x) B, both factors covers with lifted
// basepoints x' over x and y' over y.
TensorCoveringReport covering_report(CrossedComplex const& a, int x, CrossedComplex const& a_up,
                                     int x_up, CrossedMorphism const& f, int index_a,
                                     CrossedComplex const& b, int y, CrossedComplex const& b_up,
                                     int y_up, CrossedMorphism const& g, int index_b, int n) {
  auto const upper  = tensor_free(a_up, b_up, n);
  auto const lower  = tensor_free(a, b, n);
  auto const fg     = tensor_generator_maps(upper, lower, f, g);
  int const  base   = x * b.num_objects() + y;
  int const  lifted = x_up * b_up.num_objects() + y_up;

  TensorCoveringReport r;
  r.classification   = is_covering_morphism(upper.complex, lower.complex, fg);
  r.pi1_tensor       = pi1(lower.complex, base);
  r.pi1_product      = FiniteGroup::direct_product(pi1(a, x), pi1(b, y));
  r.pi1_matches      = is_isomorphic(r.pi1_tensor, r.pi1_product);
  r.pi1_cover_tensor = pi1(upper.complex, lifted);
  r.subgroup_product = FiniteGroup::direct_product(pi1(a_up, x_up), pi1(b_up, y_up));
  r.subgroup_matches = is_isomorphic(r.pi1_cover_tensor, r.subgroup_product);
  r.image_index      = image_index(upper.complex, lifted, lower.complex, base, fg);
  r.cover_index      = index_a * index_b;
  return r;
}

}  // namespace

TensorCoveringReport tensor_covering(CrossedComplex const& a, int x, Pi1Subgroup const& m,
                                     CrossedComplex const& b, int n) {
  if (!b.is_connected()) {
    throw DomainError("tensor covering: right factor is not connected");
  }
  auto const cover = universal_cover(a, x, m);
  return covering_report(a, x, cover.complex, cover.base_lift, cover.projection, cover.index(), b,
                         0, b, 0, identity_morphism(b), 1, n);
}

TensorCoveringReport tensor_of_coverings(CrossedComplex const& a, int x, Pi1Subgroup const& m,
                                         CrossedComplex const& b, int y, Pi1Subgroup const& k,
                                         int n) {
  auto const left  = universal_cover(a, x, m);
  auto const right = universal_cover(b, y, k);
  auto r  = covering_report(a, x, left.complex, left.base_lift, left.projection, left.index(), b, y,
                            right.complex, right.base_lift, right.projection, right.index(), n);
  r.label = "p(x)q";
  return r;
}

std::string AsphericalTensorReport::to_string() const {
  std::ostringstream os;
  os << asphericity.to_string();
  os << "tensor passes axioms: " << (dd_trivial ? "yes" : "no") << "\n";
  os << "pi1 product = " << describe(pi1_product) << (pi1_matches ? " (matches)" : " (MISMATCH)")
     << "\n";
  return os.str();
}

AsphericalTensorReport certify_aspherical_tensor(CrossedComplex const& f,
                                                 CrossedComplex const& g, int n) {
  AsphericalTensorReport r;
  auto const             t = tensor_free(f, g, n);
  r.dd_trivial             = check_crossed_complex_axioms(t.complex).pass();
  r.asphericity            = asphericity_check(t.complex, std::min(n, t.complex.dim));
  r.pi1_product            = FiniteGroup::direct_product(pi1(f, 0), pi1(g, 0));
  r.pi1_matches = r.asphericity.finite_cover && is_isomorphic(r.asphericity.pi1, r.pi1_product);
  return r;
}

}  // namespace xcrs
