#include "xcrs/crossed_morphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "xcrs/cover.hpp"

namespace xcrs {

namespace {

int generator_count(CrossedComplex const& c, int n) {
  if (n == 1) {
    return c.regime == Regime::concrete ? c.groupoid.num_arrows() : c.graph.num_edges();
  }
  return c.regime == Regime::concrete ? c.layer(n).total() : c.basis(n).size();
}

// --- dimension-1 arithmetic on images ---------------------------------------

CellImage arrow_identity(CrossedComplex const& t, int obj) {
  if (t.regime == Regime::concrete) {
    return t.groupoid.identity(obj);
  }
  return identity_word(obj);
}

CellImage arrow_compose(CrossedComplex const& t, CellImage const& a, CellImage const& b) {
  if (t.regime == Regime::concrete) {
    int c = t.groupoid.compose(std::get<int>(a), std::get<int>(b));
    if (c < 0) {
      throw DomainError("image arrows are not composable");
    }
    return c;
  }
  return concat(t.graph, std::get<Word>(a), std::get<Word>(b));
}

CellImage arrow_inverse(CrossedComplex const& t, CellImage const& a) {
  if (t.regime == Regime::concrete) {
    return t.groupoid.inverse(std::get<int>(a));
  }
  return inverse(t.graph, std::get<Word>(a));
}

int arrow_src(CrossedComplex const& t, CellImage const& a) {
  if (t.regime == Regime::concrete) {
    return t.groupoid.src(std::get<int>(a));
  }
  return std::get<Word>(a).start;
}

int arrow_dst(CrossedComplex const& t, CellImage const& a) {
  if (t.regime == Regime::concrete) {
    return t.groupoid.dst(std::get<int>(a));
  }
  return word_end(t.graph, std::get<Word>(a));
}

// --- higher elements of a concrete complex ----------------------------------

int concrete_act(CrossedComplex const& t, int n, int g, int arrow) {
  auto const& l      = t.layer(n);
  auto [p, e]        = l.locate(g);
  if (t.groupoid.src(arrow) != p) {
    throw DomainError("action by an arrow not starting at the element's object");
  }
  return l.global(t.groupoid.dst(arrow), l.action[arrow][e]);
}

int concrete_mul(CrossedComplex const& t, int n, int g, int h) {
  auto const& l  = t.layer(n);
  auto [p, e]    = l.locate(g);
  auto [q, f]    = l.locate(h);
  if (p != q) {
    throw DomainError("product of elements at different objects");
  }
  return l.global(p, l.groups[p].mul[e][f]);
}

int concrete_inverse(CrossedComplex const& t, int n, int g) {
  auto const& l = t.layer(n);
  auto [p, e]   = l.locate(g);
  return l.global(p, l.groups[p].inverse(e));
}

int concrete_power(CrossedComplex const& t, int n, int g, long k) {
  auto const& l    = t.layer(n);
  int const   p    = l.locate(g).first;
  int         step = k < 0 ? concrete_inverse(t, n, g) : g;
  int         out  = l.global(p, l.groups[p].identity());
  for (long i = 0; i < std::abs(k); ++i) {
    out = concrete_mul(t, n, out, step);
  }
  return out;
}

int concrete_object_of(CrossedComplex const& t, int n, int g) {
  return t.layer(n).locate(g).first;
}

CellImage act_cell(CrossedComplex const& t, int n, CellImage const& e,
                   CellImage const& arrow) {
  if (t.regime == Regime::concrete) {
    return concrete_act(t, n, std::get<int>(e), std::get<int>(arrow));
  }
  if (n == 2) {
    return elem2_act(t.graph, std::get<Elem2>(e), std::get<Word>(arrow));
  }
  return chain_act(t.graph, std::get<ChainElem>(e), std::get<Word>(arrow));
}

int cell_base(CrossedComplex const& t, int n, CellImage const& e) {
  if (t.regime == Regime::concrete) {
    return concrete_object_of(t, n, std::get<int>(e));
  }
  return n == 2 ? std::get<Elem2>(e).base : std::get<ChainElem>(e).base;
}

// Equality of free elements with a shared, lazily built universal cover.
class FreeEquality {
 public:
  explicit FreeEquality(CrossedComplex const& c) : c_(c) {}

  bool equal(int n, CellImage const& a, CellImage const& b) {
    if (c_.regime == Regime::concrete) {
      return std::get<int>(a) == std::get<int>(b);
    }
    if (n == 1) {
      return std::get<Word>(a) == std::get<Word>(b);
    }
    if (n == 2) {
      auto const& x = std::get<Elem2>(a);
      auto const& y = std::get<Elem2>(b);
      if (x.base != y.base) {
        return false;
      }
      if (x == y) {
        return true;
      }
      if (elem2_boundary(c_, x) != elem2_boundary(c_, y)) {
        return false;
      }
      return image().of(x) == image().of(y);
    }
    auto const x = chain_normalize(std::get<ChainElem>(a));
    auto const y = chain_normalize(std::get<ChainElem>(b));
    if (x.base != y.base) {
      return false;
    }
    return x == y || image().of(n, x) == image().of(n, y);
  }

 private:
  ChainImage const& image() {
    if (!img_) {
      img_.emplace(c_);
    }
    return *img_;
  }

  CrossedComplex const&     c_;
  std::optional<ChainImage> img_;
};

}  // namespace

// --- images of free elements ---------------------------------------------------

CellImage apply_word(CrossedComplex const& src, CrossedComplex const& tgt,
                     CrossedMorphism const& f, Word const& w) {
  CellImage out = arrow_identity(tgt, f.object_map.at(w.start));
  for (auto l : w.letters) {
    CellImage img = f.cells.at(0).at(l.edge);
    if (l.inverse) {
      img = arrow_inverse(tgt, img);
    }
    out = arrow_compose(tgt, out, img);
  }
  (void)src;
  return out;
}

CellImage apply_elem2(CrossedComplex const& src, CrossedComplex const& tgt,
                      CrossedMorphism const& f, Elem2 const& a) {
  int const q = f.object_map.at(a.base);
  if (tgt.regime == Regime::concrete) {
    auto const& l   = tgt.layer(2);
    int         out = l.global(q, l.groups[q].identity());
    for (auto const& t : a.terms) {
      int v = concrete_act(tgt, 2, std::get<int>(f.cells.at(1).at(t.basis)),
                           std::get<int>(apply_word(src, tgt, f, t.transport)));
      if (t.inverse) {
        v = concrete_inverse(tgt, 2, v);
      }
      out = concrete_mul(tgt, 2, out, v);
    }
    return out;
  }
  Elem2 out = elem2_identity(q);
  for (auto const& t : a.terms) {
    Elem2 v = elem2_act(tgt.graph, std::get<Elem2>(f.cells.at(1).at(t.basis)),
                        std::get<Word>(apply_word(src, tgt, f, t.transport)));
    if (t.inverse) {
      v = elem2_inverse(v);
    }
    out = elem2_mul(out, v);
  }
  return out;
}

CellImage apply_chain(CrossedComplex const& src, CrossedComplex const& tgt,
                      CrossedMorphism const& f, int n, ChainElem const& a) {
  int const q = f.object_map.at(a.base);
  if (tgt.regime == Regime::concrete) {
    auto const& l   = tgt.layer(n);
    int         out = l.global(q, l.groups[q].identity());
    for (auto const& t : a.terms) {
      int v = concrete_act(tgt, n, std::get<int>(f.cells.at(n - 1).at(t.basis)),
                           std::get<int>(apply_word(src, tgt, f, t.transport)));
      out   = concrete_mul(tgt, n, out, concrete_power(tgt, n, v, t.coef));
    }
    return out;
  }
  ChainElem out = chain_zero(q);
  for (auto const& t : a.terms) {
    ChainElem v = chain_act(tgt.graph, std::get<ChainElem>(f.cells.at(n - 1).at(t.basis)),
                            std::get<Word>(apply_word(src, tgt, f, t.transport)));
    out = chain_add(out, chain_scale(v, t.coef));
  }
  return out;
}

bool images_equal(CrossedComplex const& tgt, int n, CellImage const& a,
                  CellImage const& b) {
  FreeEquality eq(tgt);
  return eq.equal(n, a, b);
}

std::string to_string(CrossedComplex const& tgt, int n, CellImage const& a) {
  if (tgt.regime == Regime::concrete) {
    int v = std::get<int>(a);
    if (n == 1) {
      return tgt.groupoid.arrow_names.at(v);
    }
    auto [p, e] = tgt.layer(n).locate(v);
    return tgt.layer(n).groups[p].names[e] + "@" + tgt.groupoid.object_names[p];
  }
  if (n == 1) {
    return to_string(tgt.graph, std::get<Word>(a));
  }
  if (n == 2) {
    return to_string(tgt, std::get<Elem2>(a));
  }
  return to_string(tgt, n, std::get<ChainElem>(a));
}

// --- checks ------------------------------------------------------------------

namespace {

void check_structure(CrossedComplex const& src, CrossedComplex const& tgt,
                     CrossedMorphism const& f, Report& r) {
  if (src.regime == Regime::concrete && tgt.regime == Regime::free) {
    r.malformed("a concrete source needs a concrete target");
    return;
  }
  if (src.dim > tgt.dim) {
    r.malformed("source truncation exceeds the target's");
    return;
  }
  if (static_cast<int>(f.object_map.size()) != src.num_objects()) {
    r.malformed("object map has the wrong length");
    return;
  }
  for (int o : f.object_map) {
    if (o < 0 || o >= tgt.num_objects()) {
      r.malformed("object image is a dangling id");
      return;
    }
  }
  if (static_cast<int>(f.cells.size()) != src.dim) {
    r.malformed("expected one generator table per dimension 1.." + std::to_string(src.dim));
    return;
  }
  for (int n = 1; n <= src.dim; ++n) {
    auto const tag = "dimension " + std::to_string(n) + ": ";
    if (static_cast<int>(f.cells[n - 1].size()) != generator_count(src, n)) {
      r.malformed(tag + "generator table has the wrong length");
      continue;
    }
    for (auto const& img : f.cells[n - 1]) {
      bool ok;
      if (tgt.regime == Regime::concrete) {
        auto const* v = std::get_if<int>(&img);
        ok = v && *v >= 0 && *v < generator_count(tgt, n);
      } else if (n == 1) {
        auto const* w = std::get_if<Word>(&img);
        ok            = w && w->start >= 0 && w->start < tgt.num_objects();
        if (ok) {
          try {
            word_end(tgt.graph, *w);
          } catch (DomainError const&) {
            ok = false;
          }
        }
      } else if (n == 2) {
        ok = std::holds_alternative<Elem2>(img);
      } else {
        ok = std::holds_alternative<ChainElem>(img);
      }
      if (!ok) {
        r.malformed(tag + "an image is dangling or of the wrong kind");
        break;
      }
    }
  }
}

void check_concrete_source(CrossedComplex const& src, CrossedComplex const& tgt,
                           CrossedMorphism const& f, Report& r) {
  GroupoidMorphism gm{f.object_map, {}};
  for (auto const& img : f.cells[0]) {
    gm.arrow_map.push_back(std::get<int>(img));
  }
  auto gr = check_groupoid_morphism(src.groupoid, tgt.groupoid, gm);
  r.merge(gr, "dim 1 ");
  if (!gr.pass()) {
    return;
  }
  auto const& g = src.groupoid;
  for (int n = 2; n <= src.dim; ++n) {
    auto const& ls  = src.layer(n);
    auto const& lt  = tgt.layer(n);
    auto const  tag = "dim " + std::to_string(n) + " ";
    auto        img = [&](int p, int e) { return std::get<int>(f.cells[n - 1][ls.global(p, e)]); };
    bool        based = true;
    for (int p = 0; p < g.num_objects(); ++p) {
      for (int e = 0; e < ls.groups[p].size(); ++e) {
        if (lt.locate(img(p, e)).first != f.object_map[p]) {
          based = false;
          r.fail(tag + "preserves base objects", ls.groups[p].names[e] + "@" + g.object_names[p]);
        }
      }
    }
    if (!based) {
      continue;
    }
    for (int p = 0; p < g.num_objects() && !r.saturated(); ++p) {
      auto const& t = ls.groups[p];
      for (int a = 0; a < t.size(); ++a) {
        for (int b = 0; b < t.size(); ++b) {
          if (img(p, t.mul[a][b]) != concrete_mul(tgt, n, img(p, a), img(p, b))) {
            r.fail(tag + "homomorphism", t.names[a] + "," + t.names[b] + "@" + g.object_names[p]);
          }
        }
        int const q  = f.object_map[p];
        int const fa = lt.locate(img(p, a)).second;
        bool      ok;
        if (n == 2) {
          ok = std::get<int>(f.cells[0][ls.boundary[p][a]]) == lt.boundary[q][fa];
        } else {
          auto const& below = src.layer(n - 1);
          ok = std::get<int>(f.cells[n - 2][below.global(p, ls.boundary[p][a])])
               == tgt.layer(n - 1).global(q, lt.boundary[q][fa]);
        }
        if (!ok) {
          r.fail(tag + "commutes with boundary", t.names[a] + "@" + g.object_names[p]);
        }
      }
    }
    for (int a = 0; a < g.num_arrows(); ++a) {
      int s = g.src(a), d = g.dst(a);
      for (int e = 0; e < ls.groups[s].size(); ++e) {
        int lhs = img(d, ls.action[a][e]);
        int rhs = concrete_act(tgt, n, img(s, e), std::get<int>(f.cells[0][a]));
        if (lhs != rhs) {
          r.fail(tag + "commutes with action",
                 ls.groups[s].names[e] + "@" + g.object_names[s] + " by " + g.arrow_names[a]);
        }
      }
    }
  }
}

void check_free_source(CrossedComplex const& src, CrossedComplex const& tgt,
                       CrossedMorphism const& f, Report& r) {
  Graph const& g = src.graph;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto const& img = f.cells[0][e];
    if (arrow_src(tgt, img) != f.object_map[g.edges[e].src]
        || arrow_dst(tgt, img) != f.object_map[g.edges[e].dst]) {
      r.fail("dim 1 preserves endpoints", g.edges[e].name);
    }
  }
  if (!r.pass()) {
    return;
  }
  FreeEquality eq(tgt);
  for (int n = 2; n <= src.dim; ++n) {
    auto const& l   = src.basis(n);
    auto const  tag = "dim " + std::to_string(n) + " ";
    for (int b = 0; b < l.size(); ++b) {
      auto const& img = f.cells[n - 1][b];
      if (cell_base(tgt, n, img) != f.object_map[l.base[b]]) {
        r.fail(tag + "preserves base objects", l.names[b]);
        continue;
      }
      try {
        CellImage lhs, rhs;
        if (n == 2) {
          rhs = apply_word(src, tgt, f, std::get<Word>(l.boundary[b]));
          lhs = tgt.regime == Regime::concrete
                    ? CellImage{tgt.layer(2).boundary[f.object_map[l.base[b]]]
                                                    [tgt.layer(2).locate(std::get<int>(img)).second]}
                    : CellImage{elem2_boundary(tgt, std::get<Elem2>(img))};
        } else if (n == 3) {
          rhs = apply_elem2(src, tgt, f, std::get<Elem2>(l.boundary[b]));
          if (tgt.regime == Regime::concrete) {
            auto [p, e] = tgt.layer(3).locate(std::get<int>(img));
            lhs         = tgt.layer(2).global(p, tgt.layer(3).boundary[p][e]);
          } else {
            lhs = chain_boundary3(tgt, std::get<ChainElem>(img));
          }
        } else {
          rhs = apply_chain(src, tgt, f, n - 1, std::get<ChainElem>(l.boundary[b]));
          if (tgt.regime == Regime::concrete) {
            auto [p, e] = tgt.layer(n).locate(std::get<int>(img));
            lhs         = tgt.layer(n - 1).global(p, tgt.layer(n).boundary[p][e]);
          } else {
            lhs = chain_boundary(tgt, n, std::get<ChainElem>(img));
          }
        }
        if (!eq.equal(n - 1, lhs, rhs)) {
          r.fail(tag + "commutes with boundary", l.names[b]);
        }
      } catch (DomainError const& e) {
        r.fail(tag + "commutes with boundary", l.names[b] + " (" + e.what() + ")");
      } catch (BoundExceeded const& e) {
        r.fail(tag + "commutes with boundary", l.names[b] + " undecided: " + e.what());
      }
    }
  }
}

}  // namespace

Report check_crossed_morphism(CrossedComplex const& src, CrossedComplex const& tgt,
                              CrossedMorphism const& f) {
  Report r;
  check_structure(src, tgt, f, r);
  if (!r.structurally_ok()) {
    return r;
  }
  if (src.regime == Regime::concrete) {
    check_concrete_source(src, tgt, f, r);
  } else {
    check_free_source(src, tgt, f, r);
  }
  return r;
}

CrossedMorphism identity_morphism(CrossedComplex const& c) {
  CrossedMorphism f;
  for (int o = 0; o < c.num_objects(); ++o) {
    f.object_map.push_back(o);
  }
  f.cells.resize(c.dim);
  for (int n = 1; n <= c.dim; ++n) {
    for (int k = 0; k < generator_count(c, n); ++k) {
      if (c.regime == Regime::concrete) {
        f.cells[n - 1].emplace_back(k);
      } else if (n == 1) {
        f.cells[0].emplace_back(edge_word(c.graph, k));
      } else if (n == 2) {
        f.cells[1].emplace_back(elem2_generator(c, k));
      } else {
        f.cells[n - 1].emplace_back(chain_generator(c, n, k));
      }
    }
  }
  return f;
}

CrossedMorphism compose(CrossedComplex const& a, CrossedComplex const& b,
                        CrossedComplex const& c, CrossedMorphism const& first,
                        CrossedMorphism const& second) {
  CrossedMorphism out;
  for (int o : first.object_map) {
    out.object_map.push_back(second.object_map.at(o));
  }
  out.cells.resize(a.dim);
  for (int n = 1; n <= a.dim; ++n) {
    for (auto const& img : first.cells.at(n - 1)) {
      if (b.regime == Regime::concrete) {
        out.cells[n - 1].push_back(second.cells.at(n - 1).at(std::get<int>(img)));
      } else if (n == 1) {
        out.cells[0].push_back(apply_word(b, c, second, std::get<Word>(img)));
      } else if (n == 2) {
        out.cells[1].push_back(apply_elem2(b, c, second, std::get<Elem2>(img)));
      } else {
        out.cells[n - 1].push_back(apply_chain(b, c, second, n, std::get<ChainElem>(img)));
      }
    }
  }
  return out;
}

bool is_generator_map(CrossedComplex const& src, CrossedComplex const& tgt,
                      CrossedMorphism const& f) {
  if (src.regime != Regime::free || tgt.regime != Regime::free) {
    return false;
  }
  for (int n = 1; n <= src.dim; ++n) {
    for (auto const& img : f.cells.at(n - 1)) {
      if (n == 1) {
        auto const* w = std::get_if<Word>(&img);
        if (!w || w->letters.size() != 1 || w->letters[0].inverse) {
          return false;
        }
      } else if (n == 2) {
        auto const* e = std::get_if<Elem2>(&img);
        if (!e || e->terms.size() != 1 || e->terms[0].inverse
            || !e->terms[0].transport.empty()) {
          return false;
        }
      } else {
        auto const* e = std::get_if<ChainElem>(&img);
        if (!e || e->terms.size() != 1 || e->terms[0].coef != 1
            || !e->terms[0].transport.empty()) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Generator of the target hit by a generator map.
int generator_target(CellImage const& img, int n) {
  if (n == 1) {
    return std::get<Word>(img).letters[0].edge;
  }
  if (n == 2) {
    return std::get<Elem2>(img).terms[0].basis;
  }
  return std::get<ChainElem>(img).terms[0].basis;
}

enum class Fibre { bijective, surjective, neither };

Fibre combine(Fibre a, Fibre b) {
  return static_cast<Fibre>(std::max(static_cast<int>(a), static_cast<int>(b)));
}

Fibre classify_map(std::vector<int> const& images, std::vector<int> const& codomain) {
  std::set<int> hit(images.begin(), images.end());
  for (int c : codomain) {
    if (!hit.count(c)) {
      return Fibre::neither;
    }
  }
  return images.size() == codomain.size() && hit.size() == images.size()
             ? Fibre::bijective
             : Fibre::surjective;
}

CoverClass to_class(Fibre f) {
  switch (f) {
    case Fibre::bijective:
      return CoverClass::covering;
    case Fibre::surjective:
      return CoverClass::fibration_only;
    default:
      return CoverClass::neither;
  }
}

CoverClass classify_concrete(CrossedComplex const& src, CrossedComplex const& tgt,
                             CrossedMorphism const& p) {
  GroupoidMorphism gm{p.object_map, {}};
  for (auto const& img : p.cells[0]) {
    gm.arrow_map.push_back(std::get<int>(img));
  }
  Fibre out = Fibre::bijective;
  switch (is_covering_groupoid(src.groupoid, tgt.groupoid, gm)) {
    case CoverClass::covering:
      break;
    case CoverClass::fibration_only:
      out = Fibre::surjective;
      break;
    case CoverClass::neither:
      return CoverClass::neither;
  }
  for (int n = 2; n <= tgt.dim; ++n) {
    auto const& lt = tgt.layer(n);
    for (int y = 0; y < src.num_objects(); ++y) {
      int const        q = p.object_map[y];
      std::vector<int> images, codomain;
      if (n <= src.dim) {
        auto const& ls = src.layer(n);
        for (int e = 0; e < ls.groups[y].size(); ++e) {
          images.push_back(std::get<int>(p.cells[n - 1][ls.global(y, e)]));
        }
      } else {
        images.push_back(lt.global(q, lt.groups[q].identity()));
      }
      for (int e = 0; e < lt.groups[q].size(); ++e) {
        codomain.push_back(lt.global(q, e));
      }
      out = combine(out, classify_map(images, codomain));
    }
  }
  return to_class(out);
}

CoverClass classify_free(CrossedComplex const& src, CrossedComplex const& tgt,
                         CrossedMorphism const& p) {
  if (!is_generator_map(src, tgt, p)) {
    throw DomainError(
        "free covering test needs a generator-to-generator morphism");
  }
  Fibre out = Fibre::bijective;
  for (int y = 0; y < src.num_objects(); ++y) {
    int const q = p.object_map[y];
    // dimension 1: out- and in-edges
    for (bool outgoing : {true, false}) {
      std::vector<int> images, codomain;
      for (int e = 0; e < src.graph.num_edges(); ++e) {
        auto const& ed = src.graph.edges[e];
        if ((outgoing ? ed.src : ed.dst) == y) {
          images.push_back(generator_target(p.cells[0][e], 1));
        }
      }
      for (int e = 0; e < tgt.graph.num_edges(); ++e) {
        auto const& ed = tgt.graph.edges[e];
        if ((outgoing ? ed.src : ed.dst) == q) {
          codomain.push_back(e);
        }
      }
      out = combine(out, classify_map(images, codomain));
    }
    for (int n = 2; n <= tgt.dim; ++n) {
      std::vector<int> images, codomain;
      if (n <= src.dim) {
        auto const& ls = src.basis(n);
        for (int b = 0; b < ls.size(); ++b) {
          if (ls.base[b] == y) {
            images.push_back(generator_target(p.cells[n - 1][b], n));
          }
        }
      }
      auto const& lt = tgt.basis(n);
      for (int b = 0; b < lt.size(); ++b) {
        if (lt.base[b] == q) {
          codomain.push_back(b);
        }
      }
      out = combine(out, classify_map(images, codomain));
    }
  }
  return to_class(out);
}

}  // namespace

CoverClass is_covering_morphism(CrossedComplex const& src, CrossedComplex const& tgt,
                                CrossedMorphism const& p) {
  if (src.regime != tgt.regime) {
    throw DomainError("covering test: source and target regimes differ");
  }
  auto r = check_crossed_morphism(src, tgt, p);
  if (!r.pass()) {
    throw DomainError("covering test: not a morphism\n" + r.to_string());
  }
  return src.regime == Regime::concrete ? classify_concrete(src, tgt, p)
                                        : classify_free(src, tgt, p);
}

// --- lifting -------------------------------------------------------------------

namespace {

// Unique lifting through a covering p: D -> C.
class Lifter {
 public:
  Lifter(CrossedComplex const& d, CrossedComplex const& c, CrossedMorphism const& p)
      : d_(d), c_(c), p_(p) {
    if (d.regime != Regime::free) {
      return;
    }
    for (int e = 0; e < d.graph.num_edges(); ++e) {
      int base_edge = generator_target(p.cells[0][e], 1);
      in_[{d.graph.edges[e].dst, base_edge}]  = e;
      out_[{d.graph.edges[e].src, base_edge}] = e;
    }
    basis_.resize(d.dim + 1);
    for (int n = 2; n <= d.dim; ++n) {
      auto const& l = d.basis(n);
      for (int b = 0; b < l.size(); ++b) {
        basis_[n][{l.base[b], generator_target(p.cells[n - 1][b], n)}] = b;
      }
    }
  }

  // The arrow of D over `gamma` ending at `end`.
  CellImage arrow_to(CellImage const& gamma, int end) const {
    if (d_.regime == Regime::concrete) {
      int const want = std::get<int>(gamma);
      for (int a : costar(d_.groupoid, end)) {
        if (std::get<int>(p_.cells[0][a]) == want) {
          return a;
        }
      }
      throw DomainError("lifting: no arrow over " + c_.groupoid.arrow_names.at(want));
    }
    auto const& w = std::get<Word>(gamma);
    Word        out{end, {}};
    int         at = end;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      auto const& table = it->inverse ? out_ : in_;
      auto        found = table.find({at, it->edge});
      if (found == table.end()) {
        throw DomainError("lifting: no edge over " + c_.graph.edges[it->edge].name);
      }
      int e = found->second;
      out.letters.push_back({e, it->inverse});
      at = it->inverse ? d_.graph.edges[e].dst : d_.graph.edges[e].src;
    }
    std::reverse(out.letters.begin(), out.letters.end());
    out.start = at;
    return out;
  }

  // The element of D_n(at) over `e`.
  CellImage element_at(int n, CellImage const& e, int at) const {
    if (d_.regime == Regime::concrete) {
      auto const& l = d_.layer(n);
      for (int k = 0; k < l.groups[at].size(); ++k) {
        if (p_.cells[n - 1][l.global(at, k)] == e) {
          return l.global(at, k);
        }
      }
      throw DomainError("lifting: no element over " + to_string(c_, n, e));
    }
    auto basis_at = [&](int n_, int vertex, int b) {
      auto it = basis_[n_].find({vertex, b});
      if (it == basis_[n_].end()) {
        throw DomainError("lifting: no basis element over " + c_.basis(n_).names[b]);
      }
      return it->second;
    };
    if (n == 2) {
      auto const& a = std::get<Elem2>(e);
      Elem2       out{at, {}};
      for (auto const& t : a.terms) {
        Word lt = std::get<Word>(arrow_to(t.transport, at));
        int  b  = basis_at(2, lt.start, t.basis);
        out.terms.push_back({b, std::move(lt), t.inverse});
      }
      return out;
    }
    auto const& a = std::get<ChainElem>(e);
    ChainElem   out{at, {}};
    for (auto const& t : a.terms) {
      Word lt = std::get<Word>(arrow_to(t.transport, at));
      int  b  = basis_at(n, lt.start, t.basis);
      out.terms.push_back({t.coef, b, std::move(lt)});
    }
    return chain_normalize(std::move(out));
  }

 private:
  CrossedComplex const&                  d_;
  CrossedComplex const&                  c_;
  CrossedMorphism const&                 p_;
  std::map<std::pair<int, int>, int>     in_, out_;
  std::vector<std::map<std::pair<int, int>, int>> basis_;
};

}  // namespace

LiftResult lift_morphism(CrossedComplex const& d, CrossedComplex const& c,
                         CrossedMorphism const& p, CrossedComplex const& f_src,
                         CrossedMorphism const& f, int x, int y) {
  if (is_covering_morphism(d, c, p) != CoverClass::covering) {
    throw DomainError("lift: p is not a covering morphism");
  }
  if (!f_src.is_connected()) {
    throw DomainError("lift: source is not connected");
  }
  if (x < 0 || x >= f_src.num_objects() || y < 0 || y >= d.num_objects()) {
    throw DomainError("lift: unknown basepoint");
  }
  if (p.object_map[y] != f.object_map.at(x)) {
    throw DomainError("lift: basepoint mismatch, p(y) != f(x)");
  }
  auto fr = check_crossed_morphism(f_src, c, f);
  if (!fr.pass()) {
    throw DomainError("lift: f is not a morphism\n" + fr.to_string());
  }
  if (f_src.dim > d.dim) {
    throw DomainError("lift: source truncation exceeds the cover's");
  }
  Lifter const lifter(d, c, p);
  int const    objects = f_src.num_objects();

  // tau[u] : u -> x in F, and its image in C
  std::vector<CellImage> tau(objects), ftau(objects);
  std::vector<std::pair<std::string, CellImage>> loops;  // generators of F_1(x)
  auto image_of_arrow = [&](CellImage const& a) -> CellImage {
    if (f_src.regime == Regime::concrete) {
      return f.cells[0].at(std::get<int>(a));
    }
    return apply_word(f_src, c, f, std::get<Word>(a));
  };
  if (f_src.regime == Regime::free) {
    auto const t = spanning_tree(f_src.graph, x);
    for (int u = 0; u < objects; ++u) {
      tau[u] = inverse(f_src.graph, t.path[u]);
    }
    for (int gen_edge : t.generator_edge) {
      auto const& ed   = f_src.graph.edges[gen_edge];
      Word        loop = concat(f_src.graph, concat(f_src.graph, t.path[ed.src], edge_word(f_src.graph, gen_edge)),
                                std::get<Word>(tau[ed.dst]));
      loops.emplace_back(to_string(f_src.graph, loop), loop);
    }
  } else {
    auto const&      g = f_src.groupoid;
    std::vector<int> path(objects, -1);  // x -> u
    path[x] = g.identity(x);
    std::deque<int> queue{x};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a : g.star(u)) {
        if (path[g.dst(a)] < 0) {
          path[g.dst(a)] = g.compose(path[u], a);
          queue.push_back(g.dst(a));
        }
      }
    }
    for (int u = 0; u < objects; ++u) {
      tau[u] = g.inverse(path[u]);
    }
    for (int a : g.vertex_group_arrows(x)) {
      loops.emplace_back(g.arrow_names[a], a);
    }
  }
  for (int u = 0; u < objects; ++u) {
    ftau[u] = image_of_arrow(tau[u]);
  }

  // condition (ii): every loop at x maps into p(D_1(y))
  for (auto const& [name, loop] : loops) {
    CellImage img  = image_of_arrow(loop);
    CellImage lift = lifter.arrow_to(img, y);
    if (arrow_src(d, lift) != y) {
      return LiftResult{std::nullopt, "f(" + name + ") = " + to_string(c, 1, img)
                                          + " is not in p(D_1(y))"};
    }
  }

  std::vector<CellImage> tau_bar(objects);  // lifts of f(tau_u) ending at y
  CrossedMorphism        out;
  for (int u = 0; u < objects; ++u) {
    tau_bar[u] = lifter.arrow_to(ftau[u], y);
    out.object_map.push_back(arrow_src(d, tau_bar[u]));
  }
  out.cells.resize(f_src.dim);

  // dimension 1: a |-> tau_bar_u . lift(f(tau_u^-1 a tau_v)) . tau_bar_v^-1
  int const arrows = f_src.regime == Regime::concrete ? f_src.groupoid.num_arrows()
                                                      : f_src.graph.num_edges();
  for (int a = 0; a < arrows; ++a) {
    int       u, v;
    CellImage arrow;
    if (f_src.regime == Regime::concrete) {
      u     = f_src.groupoid.src(a);
      v     = f_src.groupoid.dst(a);
      arrow = a;
    } else {
      u     = f_src.graph.edges[a].src;
      v     = f_src.graph.edges[a].dst;
      arrow = edge_word(f_src.graph, a);
    }
    auto const& fs = f_src;
    auto        fcompose = [&](CellImage const& p1, CellImage const& p2) {
      return arrow_compose(fs, p1, p2);
    };
    CellImage moved = fcompose(fcompose(arrow_inverse(fs, tau[u]), arrow), tau[v]);
    CellImage loop  = lifter.arrow_to(image_of_arrow(moved), y);
    out.cells[0].push_back(arrow_compose(
        d, arrow_compose(d, tau_bar[u], loop), arrow_inverse(d, tau_bar[v])));
  }

  // higher dimensions: alpha |-> lift(f(alpha)^{f(tau_u)})^{tau_bar_u^-1}
  for (int n = 2; n <= f_src.dim; ++n) {
    int const count = generator_count(f_src, n);
    for (int k = 0; k < count; ++k) {
      int const u = f_src.regime == Regime::concrete ? f_src.layer(n).locate(k).first
                                                     : f_src.basis(n).base[k];
      CellImage moved  = act_cell(c, n, f.cells[n - 1][k], ftau[u]);
      CellImage lifted = lifter.element_at(n, moved, y);
      out.cells[n - 1].push_back(act_cell(d, n, lifted, arrow_inverse(d, tau_bar[u])));
    }
  }
  return LiftResult{std::move(out), {}};
}

}  // namespace xcrs
