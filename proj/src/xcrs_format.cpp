#include "xcrs/xcrs_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace xcrs {

CrossedComplex const& XcrsDocument::complex(std::string const& name) const {
  for (auto const& c : complexes) {
    if (c.name == name) {
      return c.complex;
    }
  }
  throw DomainError("document has no complex named '" + name + "'");
}

XcrsDocument::NamedMorphism const& XcrsDocument::morphism(std::string const& name) const {
  for (auto const& m : morphisms) {
    if (m.name == name) {
      return m;
    }
  }
  throw DomainError("document has no morphism named '" + name + "'");
}

namespace {

struct Token {
  std::string text;
  int         column = 1;
};

struct Line {
  int                number = 0;
  bool               indented = false;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string const& text) {
  std::vector<Line>  out;
  std::istringstream in(text);
  std::string        raw;
  int                number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    Line line{number, !raw.empty() && (raw[0] == ' ' || raw[0] == '\t'), {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
        ++j;
      }
      if (j > i) {
        line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      }
      i = j;
    }
    if (!line.tokens.empty()) {
      out.push_back(std::move(line));
    }
  }
  return out;
}

bool is_block_start(Line const& l) {
  auto const& t = l.tokens[0].text;
  return !l.indented && (t == "complex" || t == "morphism" || t == "cubical");
}

class Parser {
 public:
  explicit Parser(std::string const& text) : lines_(split_lines(text)) {}

  XcrsDocument run() {
    if (lines_.empty()) {
      throw ParseError(1, 1, "empty document; expected 'xcrs 1'");
    }
    auto const& head = lines_[0];
    if (head.tokens[0].text != "xcrs" || head.tokens.size() != 2) {
      throw ParseError(head.number, 1, "expected header 'xcrs <version>'");
    }
    doc_.version = to_int(head.tokens[1]);
    if (doc_.version != 1) {
      throw ParseError(head.number, head.tokens[1].column, "unsupported format version");
    }
    pos_ = 1;
    if (pos_ < lines_.size() && lines_[pos_].tokens[0].text == "regime") {
      doc_.complexes.push_back({"main", parse_complex()});
    }
    while (pos_ < lines_.size()) {
      auto const& l = lines_[pos_];
      if (!is_block_start(l) || l.tokens.size() < 2) {
        throw ParseError(l.number, l.tokens[0].column,
                         "expected 'complex NAME', 'morphism NAME SRC TGT' or 'cubical NAME'");
      }
      std::string const kind = l.tokens[0].text;
      std::string const name = l.tokens[1].text;
      if (kind == "complex") {
        expect_count(l, 2);
        ++pos_;
        doc_.complexes.push_back({name, parse_complex()});
      } else if (kind == "morphism") {
        expect_count(l, 4);
        ++pos_;
        parse_morphism(l);
      } else {
        expect_count(l, 2);
        ++pos_;
        doc_.cubicals.push_back({name, parse_cubical()});
      }
    }
    return std::move(doc_);
  }

 private:
  // --- low level -------------------------------------------------------------

  [[noreturn]] static void fail(Line const& l, Token const& t, std::string const& what) {
    throw ParseError(l.number, t.column, what);
  }
  [[noreturn]] static void fail(Line const& l, std::string const& what) {
    throw ParseError(l.number, l.tokens[0].column, what);
  }

  static void expect_count(Line const& l, std::size_t n) {
    if (l.tokens.size() != n) {
      fail(l, "expected " + std::to_string(n) + " tokens, found " + std::to_string(l.tokens.size()));
    }
  }

  int to_int(Token const& t, Line const* l = nullptr) const {
    int  v   = 0;
    auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size()) {
      throw ParseError(l ? l->number : lines_[0].number, t.column, "expected an integer, found '" + t.text + "'");
    }
    return v;
  }

  bool at_end_of_block() const {
    return pos_ >= lines_.size() || is_block_start(lines_[pos_]);
  }

  Line const& next_header(std::string const& what) {
    if (at_end_of_block()) {
      auto const& l = lines_[std::min(pos_, lines_.size() - 1)];
      fail(l, "expected " + what);
    }
    auto const& l = lines_[pos_];
    if (l.indented) {
      fail(l, "expected " + what + ", found an indented row");
    }
    ++pos_;
    return l;
  }

  // Indented rows following the current header.
  std::vector<Line const*> rows() {
    std::vector<Line const*> out;
    while (pos_ < lines_.size() && lines_[pos_].indented) {
      out.push_back(&lines_[pos_++]);
    }
    return out;
  }

  // "name ... : rest" -> index of ':'.
  static std::size_t colon(Line const& l) {
    for (std::size_t i = 0; i < l.tokens.size(); ++i) {
      if (l.tokens[i].text == ":") {
        return i;
      }
    }
    fail(l, "expected ':' separating the row head from its entries");
  }

  static int find(std::vector<std::string> const& names, std::string const& s) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      if (names[i] == s) {
        return i;
      }
    }
    return -1;
  }

  static int lookup(std::vector<std::string> const& names, Line const& l, Token const& t,
                    std::string const& kind) {
    int i = find(names, t.text);
    if (i < 0) {
      fail(l, t, "unknown " + kind + " '" + t.text + "'");
    }
    return i;
  }

  // --- complexes -------------------------------------------------------------

  CrossedComplex parse_complex() {
    CrossedComplex c;
    auto const&    reg = next_header("'regime free|concrete'");
    if (reg.tokens[0].text != "regime" || reg.tokens.size() != 2) {
      fail(reg, "expected 'regime free|concrete'");
    }
    if (reg.tokens[1].text == "free") {
      c.regime = Regime::free;
    } else if (reg.tokens[1].text == "concrete") {
      c.regime = Regime::concrete;
    } else {
      fail(reg, reg.tokens[1], "unknown regime '" + reg.tokens[1].text + "'");
    }
    auto const& dim = next_header("'dim N'");
    if (dim.tokens[0].text != "dim" || dim.tokens.size() != 2) {
      fail(dim, "expected 'dim N'");
    }
    c.dim = to_int(dim.tokens[1], &dim);
    if (c.dim < 0) {
      fail(dim, dim.tokens[1], "dimension must be >= 0");
    }
    auto const& obj = next_header("'objects: ...'");
    if (obj.tokens[0].text != "objects:") {
      fail(obj, "expected 'objects: ...'");
    }
    std::vector<std::string> objects;
    for (std::size_t i = 1; i < obj.tokens.size(); ++i) {
      if (find(objects, obj.tokens[i].text) >= 0) {
        fail(obj, obj.tokens[i], "duplicate object '" + obj.tokens[i].text + "'");
      }
      objects.push_back(obj.tokens[i].text);
    }
    if (c.regime == Regime::free) {
      c.graph.vertex_names = objects;
      parse_free(c);
    } else {
      c.groupoid.object_names = objects;
      parse_concrete(c);
    }
    return c;
  }

  Word parse_word(Graph const& g, Line const& l, std::size_t from, std::size_t to, int start) {
    Word w{start, {}};
    if (to - from == 1 && l.tokens[from].text == "1") {
      return w;
    }
    int at = start;
    for (std::size_t i = from; i < to; ++i) {
      Letter letter = parse_letter(g, l, l.tokens[i], l.tokens[i].text);
      if (letter_src(g, letter) != at) {
        fail(l, l.tokens[i], "letter '" + l.tokens[i].text + "' does not start where the word is");
      }
      at = letter_dst(g, letter);
      w.letters.push_back(letter);
    }
    return w;
  }

  Letter parse_letter(Graph const& g, Line const& l, Token const& t, std::string text) {
    bool inv = false;
    if (text.size() > 3 && text.ends_with("^-1")) {
      inv = true;
      text.resize(text.size() - 3);
    }
    int e = g.edge_index(text);
    if (e < 0) {
      fail(l, t, "unknown edge '" + text + "'");
    }
    return {e, inv};
  }

  // name[^a.b^-1] -> (basis, transport from the basis base)
  std::pair<int, Word> parse_decorated(CrossedComplex const& c, int n, Line const& l, Token const& t,
                                       std::string const& body) {
    auto const  caret = body.find('^');
    std::string name  = body.substr(0, caret);
    auto const& names = c.basis(n).names;
    int         b     = find(names, name);
    if (b < 0) {
      fail(l, t, "unknown basis element '" + name + "' in dimension " + std::to_string(n));
    }
    Word w{c.basis(n).base[b], {}};
    if (caret != std::string::npos) {
      std::stringstream ss(body.substr(caret + 1));
      std::string       part;
      int               at = w.start;
      while (std::getline(ss, part, '.')) {
        Letter letter = parse_letter(c.graph, l, t, part);
        if (letter_src(c.graph, letter) != at) {
          fail(l, t, "transport of '" + body + "' is not a path");
        }
        at = letter_dst(c.graph, letter);
        w.letters.push_back(letter);
      }
    }
    return {b, w};
  }

  Elem2 parse_elem2(CrossedComplex const& c, Line const& l, std::size_t from, std::size_t to, int base) {
    Elem2 a{base, {}};
    if (to - from == 1 && l.tokens[from].text == "1") {
      return a;
    }
    for (std::size_t i = from; i < to; ++i) {
      auto const& t    = l.tokens[i];
      bool const  inv  = t.text.starts_with("-");
      auto [b, w]      = parse_decorated(c, 2, l, t, t.text.substr(inv ? 1 : 0));
      if (word_end(c.graph, w) != base) {
        fail(l, t, "term '" + t.text + "' does not live at " + c.graph.vertex_names.at(base));
      }
      a.terms.push_back({b, w, inv});
    }
    return a;
  }

  ChainElem parse_chain(CrossedComplex const& c, int n, Line const& l, std::size_t from,
                        std::size_t to, int base) {
    ChainElem a{base, {}};
    if (to - from == 1 && l.tokens[from].text == "0") {
      return a;
    }
    for (std::size_t i = from; i < to; ++i) {
      auto const& t    = l.tokens[i];
      std::string body = t.text;
      long        coef = 1;
      if (auto star = body.find('*'); star != std::string::npos) {
        auto res = std::from_chars(body.data(), body.data() + star, coef);
        if (res.ec != std::errc{} || res.ptr != body.data() + star) {
          fail(l, t, "bad coefficient in '" + t.text + "'");
        }
        body.erase(0, star + 1);
      } else if (body.starts_with("-")) {
        coef = -1;
        body.erase(0, 1);
      }
      auto [b, w] = parse_decorated(c, n, l, t, body);
      if (word_end(c.graph, w) != base) {
        fail(l, t, "term '" + t.text + "' does not live at " + c.graph.vertex_names.at(base));
      }
      a.terms.push_back({coef, b, w});
    }
    return chain_normalize(a);
  }

  void parse_free(CrossedComplex& c) {
    auto& g = c.graph;
    c.free.assign(std::max(0, c.dim - 1), {});
    while (!at_end_of_block()) {
      auto const& h    = next_header("a section header");
      auto const& head = h.tokens[0].text;
      if (head == "edges:") {
        expect_count(h, 1);
        for (auto const* r : rows()) {
          expect_count(*r, 3);
          if (g.edge_index(r->tokens[0].text) >= 0) {
            fail(*r, "duplicate edge '" + r->tokens[0].text + "'");
          }
          g.edges.push_back({lookup(g.vertex_names, *r, r->tokens[1], "object"),
                             lookup(g.vertex_names, *r, r->tokens[2], "object"), r->tokens[0].text});
        }
      } else if (head == "basis") {
        if (h.tokens.size() != 2 || !h.tokens[1].text.ends_with(":")) {
          fail(h, "expected 'basis N:'");
        }
        Token t = h.tokens[1];
        t.text.pop_back();
        int const n = to_int(t, &h);
        if (n < 2 || n > c.dim) {
          fail(h, h.tokens[1], "basis dimension outside 2..dim");
        }
        auto& layer = c.free[n - 2];
        for (auto const* r : rows()) {
          std::size_t const k = colon(*r);
          if (k != 2 || r->tokens.size() < 4) {
            fail(*r, "expected 'name base : boundary'");
          }
          if (find(layer.names, r->tokens[0].text) >= 0) {
            fail(*r, "duplicate basis element '" + r->tokens[0].text + "'");
          }
          int const base = lookup(g.vertex_names, *r, r->tokens[1], "object");
          layer.names.push_back(r->tokens[0].text);
          layer.base.push_back(base);
          std::size_t const from = 3, to = r->tokens.size();
          if (n == 2) {
            Word w = parse_word(g, *r, from, to, base);
            if (word_end(g, w) != base) {
              fail(*r, r->tokens[from], "boundary word is not a loop at " + g.vertex_names[base]);
            }
            layer.boundary.emplace_back(std::move(w));
          } else if (n == 3) {
            layer.boundary.emplace_back(parse_elem2(c, *r, from, to, base));
          } else {
            layer.boundary.emplace_back(parse_chain(c, n - 1, *r, from, to, base));
          }
        }
      } else {
        fail(h, "unknown section '" + head + "' in a free complex");
      }
    }
  }

  void parse_concrete(CrossedComplex& c) {
    auto&                    g = c.groupoid;
    int const                objects = g.num_objects();
    c.concrete.assign(std::max(0, c.dim - 1), {});
    for (auto& l : c.concrete) {
      l.groups.assign(objects, {});
      l.boundary.assign(objects, {});
    }
    std::vector<std::vector<bool>> have_group(c.concrete.size(), std::vector<bool>(objects, false));
    std::vector<std::vector<bool>> have_boundary = have_group;
    struct Pending {
      Line const* line;
      int         n;
    };
    std::vector<Pending> actions;
    std::vector<Line const*> compose_rows;
    Line const* identities = nullptr;
    Line const* inverses   = nullptr;
    auto layer_of = [&](Line const& h, Token const& t) -> int {
      int const n = to_int(t, &h);
      if (n < 2 || n > c.dim) {
        fail(h, t, "dimension outside 2..dim");
      }
      return n;
    };
    while (!at_end_of_block()) {
      auto const& h    = next_header("a section header");
      auto const& head = h.tokens[0].text;
      if (head == "arrows:") {
        expect_count(h, 1);
        for (auto const* r : rows()) {
          expect_count(*r, 3);
          if (find(g.arrow_names, r->tokens[0].text) >= 0) {
            fail(*r, "duplicate arrow '" + r->tokens[0].text + "'");
          }
          g.arrow_names.push_back(r->tokens[0].text);
          g.arrows.push_back({lookup(g.object_names, *r, r->tokens[1], "object"),
                              lookup(g.object_names, *r, r->tokens[2], "object")});
        }
      } else if (head == "identities:") {
        identities = &h;
      } else if (head == "inverses:") {
        inverses = &h;
      } else if (head == "compose:") {
        expect_count(h, 1);
        compose_rows = rows();
      } else if (head == "group" || head == "boundary") {
        if (h.tokens.size() < 3 || !h.tokens[2].text.ends_with(":")) {
          fail(h, "expected '" + head + " N OBJECT:'");
        }
        int const n   = layer_of(h, h.tokens[1]);
        Token     obj = h.tokens[2];
        obj.text.pop_back();
        int const p = lookup(g.object_names, h, obj, "object");
        if (head == "group") {
          expect_count(h, 3);
          if (have_group[n - 2][p]) {
            fail(h, "duplicate group section");
          }
          have_group[n - 2][p] = true;
          auto& t              = c.concrete[n - 2].groups[p];
          auto  rs             = rows();
          for (auto const* r : rs) {
            t.names.push_back(r->tokens[0].text);
          }
          for (auto const* r : rs) {
            if (colon(*r) != 1 || r->tokens.size() != rs.size() + 2) {
              fail(*r, "expected 'element : one product per element'");
            }
            std::vector<int> row;
            for (std::size_t i = 2; i < r->tokens.size(); ++i) {
              row.push_back(lookup(t.names, *r, r->tokens[i], "element"));
            }
            t.mul.push_back(std::move(row));
          }
        } else {
          have_boundary[n - 2][p] = true;
          pending_boundaries_.push_back({&h, n, p});
        }
      } else if (head == "action") {
        if (h.tokens.size() != 2 || !h.tokens[1].text.ends_with(":")) {
          fail(h, "expected 'action N:'");
        }
        Token t = h.tokens[1];
        t.text.pop_back();
        int const n = layer_of(h, t);
        for (auto const* r : rows()) {
          actions.push_back({r, n});
        }
      } else {
        fail(h, "unknown section '" + head + "' in a concrete complex");
      }
    }
    int const m = g.num_arrows();
    g.compose_table.assign(static_cast<std::size_t>(m) * m, -1);
    for (auto const* r : compose_rows) {
      if (colon(*r) != 1 || static_cast<int>(r->tokens.size()) != m + 2) {
        fail(*r, "expected 'arrow : one entry per arrow'");
      }
      int const a = lookup(g.arrow_names, *r, r->tokens[0], "arrow");
      for (int b = 0; b < m; ++b) {
        auto const& t = r->tokens[b + 2];
        g.compose_table[a * m + b] = t.text == "-" ? -1 : lookup(g.arrow_names, *r, t, "arrow");
      }
    }
    auto per = [&](Line const* l, int count, std::vector<int>& out, std::string const& what) {
      out.assign(count, -1);
      if (l == nullptr) {
        return;
      }
      if (static_cast<int>(l->tokens.size()) != count + 1) {
        fail(*l, "expected one " + what + " entry each");
      }
      for (int i = 0; i < count; ++i) {
        auto const& t = l->tokens[i + 1];
        out[i]        = t.text == "-" ? -1 : lookup(g.arrow_names, *l, t, "arrow");
      }
    };
    per(identities, objects, g.identity_table, "object");
    per(inverses, m, g.inverse_table, "arrow");
    for (int n = 2; n <= c.dim; ++n) {
      for (int p = 0; p < objects; ++p) {
        if (!have_group[n - 2][p]) {
          fail(lines_[std::min(pos_, lines_.size()) - 1],
               "missing 'group " + std::to_string(n) + " " + g.object_names[p] + ":' section");
        }
      }
      c.concrete[n - 2].action.assign(m, {});
    }
    for (auto const& [h, n, p] : pending_boundaries_) {
      auto const& t = c.concrete[n - 2].groups[p];
      if (static_cast<int>(h->tokens.size()) != t.size() + 3) {
        fail(*h, "expected one boundary entry per element");
      }
      auto& out = c.concrete[n - 2].boundary[p];
      for (std::size_t i = 3; i < h->tokens.size(); ++i) {
        auto const& tok = h->tokens[i];
        if (n == 2) {
          out.push_back(lookup(g.arrow_names, *h, tok, "arrow"));
        } else {
          out.push_back(lookup(c.concrete[n - 3].groups[p].names, *h, tok, "element"));
        }
      }
    }
    pending_boundaries_.clear();
    for (auto const& [r, n] : actions) {
      if (colon(*r) != 1) {
        fail(*r, "expected 'arrow : images'");
      }
      int const   a   = lookup(g.arrow_names, *r, r->tokens[0], "arrow");
      auto const& src = c.concrete[n - 2].groups[g.src(a)];
      auto const& dst = c.concrete[n - 2].groups[g.dst(a)];
      if (static_cast<int>(r->tokens.size()) != src.size() + 2) {
        fail(*r, "expected one image per element of the source group");
      }
      auto& out = c.concrete[n - 2].action[a];
      for (std::size_t i = 2; i < r->tokens.size(); ++i) {
        out.push_back(lookup(dst.names, *r, r->tokens[i], "element"));
      }
    }
    for (int n = 2; n <= c.dim; ++n) {
      for (int p = 0; p < objects; ++p) {
        if (!have_boundary[n - 2][p]) {
          fail(lines_[std::min(pos_, lines_.size()) - 1],
               "missing 'boundary " + std::to_string(n) + " " + g.object_names[p] + ":' section");
        }
      }
    }
  }

  // --- morphisms -------------------------------------------------------------

  // Concrete elements are written name@object.
  static int concrete_element(CrossedComplex const& c, int n, Line const& l, Token const& t) {
    auto const at = t.text.rfind('@');
    if (at == std::string::npos) {
      fail(l, t, "expected element@object, found '" + t.text + "'");
    }
    Token obj{t.text.substr(at + 1), t.column};
    int const p = lookup(c.groupoid.object_names, l, obj, "object");
    if (n > c.dim) {
      fail(l, t, "no elements in dimension " + std::to_string(n));
    }
    auto const& layer = c.layer(n);
    int const   e     = find(layer.groups[p].names, t.text.substr(0, at));
    if (e < 0) {
      fail(l, t, "unknown element '" + t.text + "'");
    }
    return layer.global(p, e);
  }

  static std::vector<std::string> generator_names(CrossedComplex const& c, int n) {
    std::vector<std::string> out;
    if (c.regime == Regime::free) {
      if (n == 1) {
        for (auto const& e : c.graph.edges) {
          out.push_back(e.name);
        }
      } else {
        out = c.basis(n).names;
      }
      return out;
    }
    if (n == 1) {
      return c.groupoid.arrow_names;
    }
    auto const& l = c.layer(n);
    for (int p = 0; p < c.num_objects(); ++p) {
      for (auto const& name : l.groups[p].names) {
        out.push_back(name + "@" + c.groupoid.object_names[p]);
      }
    }
    return out;
  }

  // Object at which generator k of dimension n lives (its source in dimension 1).
  static int generator_object(CrossedComplex const& c, int n, int k) {
    if (c.regime == Regime::free) {
      return n == 1 ? c.graph.edges[k].src : c.basis(n).base[k];
    }
    return n == 1 ? c.groupoid.src(k) : c.layer(n).locate(k).first;
  }

  void parse_morphism(Line const& head) {
    XcrsDocument::NamedMorphism m;
    m.name   = head.tokens[1].text;
    m.source = head.tokens[2].text;
    m.target = head.tokens[3].text;
    CrossedComplex const* src = nullptr;
    CrossedComplex const* tgt = nullptr;
    for (auto const& c : doc_.complexes) {
      if (c.name == m.source) src = &c.complex;
      if (c.name == m.target) tgt = &c.complex;
    }
    if (src == nullptr) fail(head, head.tokens[2], "unknown complex '" + m.source + "'");
    if (tgt == nullptr) fail(head, head.tokens[3], "unknown complex '" + m.target + "'");
    auto const& src_objects = src->object_names();
    auto const& tgt_objects = tgt->object_names();
    m.map.object_map.assign(src_objects.size(), -1);
    m.map.cells.assign(src->dim, {});
    std::vector<std::vector<bool>> seen(src->dim);
    for (int n = 1; n <= src->dim; ++n) {
      m.map.cells[n - 1].assign(generator_names(*src, n).size(), CellImage{0});
      seen[n - 1].assign(m.map.cells[n - 1].size(), false);
    }
    std::vector<bool> seen_objects(src_objects.size(), false);
    while (!at_end_of_block()) {
      auto const& h = next_header("'objects:' or 'cells N:'");
      if (h.tokens[0].text == "objects:") {
        expect_count(h, 1);
        for (auto const* r : rows()) {
          if (colon(*r) != 1 || r->tokens.size() != 3) {
            fail(*r, "expected 'object : image'");
          }
          int const u = lookup(src_objects, *r, r->tokens[0], "source object");
          m.map.object_map[u] = lookup(tgt_objects, *r, r->tokens[2], "target object");
          seen_objects[u]     = true;
        }
        continue;
      }
      if (h.tokens[0].text != "cells" || h.tokens.size() != 2 || !h.tokens[1].text.ends_with(":")) {
        fail(h, "expected 'objects:' or 'cells N:'");
      }
      Token t = h.tokens[1];
      t.text.pop_back();
      int const n = to_int(t, &h);
      if (n < 1 || n > src->dim) {
        fail(h, h.tokens[1], "dimension outside 1..source dim");
      }
      auto const names = generator_names(*src, n);
      for (auto const* r : rows()) {
        if (colon(*r) != 1 || r->tokens.size() < 3) {
          fail(*r, "expected 'generator : image'");
        }
        int const k = lookup(names, *r, r->tokens[0], "generator");
        seen[n - 1][k] = true;
        int const at   = m.map.object_map[generator_object(*src, n, k)];
        if (at < 0) {
          fail(*r, "object images must precede cell images");
        }
        std::size_t const from = 2, to = r->tokens.size();
        if (tgt->regime == Regime::concrete) {
          if (to - from != 1) {
            fail(*r, "expected a single target id");
          }
          m.map.cells[n - 1][k] =
              n == 1 ? lookup(tgt->groupoid.arrow_names, *r, r->tokens[from], "arrow")
                     : concrete_element(*tgt, n, *r, r->tokens[from]);
        } else if (n == 1) {
          m.map.cells[0][k] = parse_word(tgt->graph, *r, from, to, at);
        } else if (n > tgt->dim) {
          fail(*r, "target has no dimension " + std::to_string(n));
        } else if (n == 2) {
          m.map.cells[1][k] = parse_elem2(*tgt, *r, from, to, at);
        } else {
          m.map.cells[n - 1][k] = parse_chain(*tgt, n, *r, from, to, at);
        }
      }
    }
    for (std::size_t u = 0; u < seen_objects.size(); ++u) {
      if (!seen_objects[u]) {
        fail(head, "morphism '" + m.name + "' has no image for object '" + src_objects[u] + "'");
      }
    }
    for (int n = 1; n <= src->dim; ++n) {
      for (std::size_t k = 0; k < seen[n - 1].size(); ++k) {
        if (!seen[n - 1][k]) {
          fail(head, "morphism '" + m.name + "' has no image for generator '"
                         + generator_names(*src, n)[k] + "'");
        }
      }
    }
    doc_.morphisms.push_back(std::move(m));
  }

  // --- cubical objects -------------------------------------------------------

  std::vector<int> values(Line const& h, std::size_t from, int count, int range) {
    if (static_cast<int>(h.tokens.size() - from) != count) {
      fail(h, "expected " + std::to_string(count) + " entries");
    }
    std::vector<int> out;
    for (std::size_t i = from; i < h.tokens.size(); ++i) {
      int v = to_int(h.tokens[i], &h);
      if (v < 0 || v >= range) {
        fail(h, h.tokens[i], "id out of range");
      }
      out.push_back(v);
    }
    return out;
  }

  CubicalObject parse_cubical() {
    CubicalObject k;
    auto const&   top = next_header("'top N'");
    if (top.tokens[0].text != "top" || top.tokens.size() != 2) {
      fail(top, "expected 'top N'");
    }
    k.top = to_int(top.tokens[1], &top);
    if (k.top < 0 || k.top > max_cubical_dim) {
      fail(top, top.tokens[1], "top dimension outside 0..3");
    }
    auto const& sizes = next_header("'sizes: ...'");
    if (sizes.tokens[0].text != "sizes:" || static_cast<int>(sizes.tokens.size()) != k.top + 2) {
      fail(sizes, "expected 'sizes:' with one entry per dimension");
    }
    for (int n = 0; n <= k.top; ++n) {
      k.sizes[n] = to_int(sizes.tokens[n + 1], &sizes);
    }
    for (int n = 1; n <= k.top; ++n) {
      k.faces[n].resize(n);
      k.negatives[n].resize(n);
      k.compositions[n].resize(n);
    }
    for (int n = 0; n < k.top; ++n) {
      k.degeneracies[n].resize(n + 1);
      k.connections[n].resize(n);
    }
    auto sign_of = [&](Line const& h, Token t) {
      t.text.pop_back();
      if (t.text != "-" && t.text != "+") {
        fail(h, t, "expected sign - or +");
      }
      return t.text == "-" ? 0 : 1;
    };
    auto dims = [&](Line const& h, int lo, int hi) {
      int const n = to_int(h.tokens[1], &h);
      int const i = to_int(h.tokens[2], &h);
      if (n < lo || n > hi) fail(h, h.tokens[1], "dimension out of range");
      return std::pair{n, i};
    };
    while (!at_end_of_block()) {
      auto const& h    = next_header("an operator table");
      auto const& head = h.tokens[0].text;
      auto        col  = [&](std::size_t i) {
        if (h.tokens.size() <= i || !h.tokens[i].text.ends_with(":")) {
          fail(h, "expected '" + head + " ...:' header");
        }
      };
      if (head == "face" || head == "connection") {
        col(3);
        bool const face = head == "face";
        auto [n, i]     = face ? dims(h, 1, k.top) : dims(h, 1, k.top - 1);
        if (i < 1 || i > n) fail(h, h.tokens[2], "index out of range");
        int const s = sign_of(h, h.tokens[3]);
        if (face) {
          k.faces[n][i - 1][s] = values(h, 4, k.sizes[n], k.sizes[n - 1]);
        } else {
          k.connections[n][i - 1][s] = values(h, 4, k.sizes[n], k.sizes[n + 1]);
        }
      } else if (head == "degeneracy" || head == "negative") {
        col(2);
        Token   it = h.tokens[2];
        it.text.pop_back();
        bool const deg = head == "degeneracy";
        int const  n   = to_int(h.tokens[1], &h);
        int const  i   = to_int(it, &h);
        if (deg ? (n < 0 || n >= k.top || i < 1 || i > n + 1) : (n < 1 || n > k.top || i < 1 || i > n)) {
          fail(h, "operator index out of range");
        }
        if (deg) {
          k.degeneracies[n][i - 1] = values(h, 3, k.sizes[n], k.sizes[n + 1]);
        } else {
          k.negatives[n][i - 1] = values(h, 3, k.sizes[n], k.sizes[n]);
        }
      } else if (head == "compose") {
        col(2);
        Token it = h.tokens[2];
        it.text.pop_back();
        int const n = to_int(h.tokens[1], &h);
        int const i = to_int(it, &h);
        if (n < 1 || n > k.top || i < 1 || i > n) {
          fail(h, "operator index out of range");
        }
        for (auto const* r : rows()) {
          auto v = values(*r, 0, 3, k.sizes[n]);
          k.compositions[n][i - 1][CubicalObject::pair_key(v[0], v[1])] = v[2];
        }
      } else if (head == "thin") {
        col(1);
        Token t = h.tokens[1];
        t.text.pop_back();
        int const n = to_int(t, &h);
        if (n < 2 || n > k.top) {
          fail(h, h.tokens[1], "thin flags exist in dimensions 2..top");
        }
        auto v = values(h, 2, k.sizes[n], 2);
        k.thin[n].assign(v.begin(), v.end());
      } else {
        fail(h, "unknown operator table '" + head + "'");
      }
    }
    return k;
  }

  struct PendingBoundary {
    Line const* line;
    int         n;
    int         object;
  };

  std::vector<Line>            lines_;
  std::size_t                  pos_ = 0;
  XcrsDocument                 doc_;
  std::vector<PendingBoundary> pending_boundaries_;
};

// --- serialization -----------------------------------------------------------

std::string join(std::vector<std::string> const& items) {
  std::string out;
  for (auto const& s : items) {
    out += " " + s;
  }
  return out;
}

std::string word_tokens(Graph const& g, Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (auto const& l : w.letters) {
    out += (out.empty() ? "" : " ") + g.edges.at(l.edge).name + (l.inverse ? "^-1" : "");
  }
  return out;
}

void write_complex(std::ostringstream& os, std::string const& name, CrossedComplex const& c) {
  os << "complex " << name << "\n";
  os << "regime " << (c.regime == Regime::free ? "free" : "concrete") << "\n";
  os << "dim " << c.dim << "\n";
  os << "objects:" << join(c.object_names()) << "\n";
  if (c.regime == Regime::free) {
    auto const& g = c.graph;
    os << "edges:\n";
    for (auto const& e : g.edges) {
      os << "  " << e.name << " " << g.vertex_names[e.src] << " " << g.vertex_names[e.dst] << "\n";
    }
    for (int n = 2; n <= c.dim; ++n) {
      auto const& l = c.basis(n);
      os << "basis " << n << ":\n";
      for (int b = 0; b < l.size(); ++b) {
        os << "  " << l.names[b] << " " << g.vertex_names[l.base[b]] << " : ";
        if (n == 2) {
          os << word_tokens(g, std::get<Word>(l.boundary[b]));
        } else if (n == 3) {
          os << to_string(c, std::get<Elem2>(l.boundary[b]));
        } else {
          os << to_string(c, n - 1, std::get<ChainElem>(l.boundary[b]));
        }
        os << "\n";
      }
    }
    return;
  }
  auto const& g     = c.groupoid;
  auto        arrow = [&](int a) { return a < 0 ? std::string("-") : g.arrow_names.at(a); };
  os << "arrows:\n";
  for (int a = 0; a < g.num_arrows(); ++a) {
    os << "  " << g.arrow_names[a] << " " << g.object_names[g.src(a)] << " "
       << g.object_names[g.dst(a)] << "\n";
  }
  os << "identities:";
  for (int p = 0; p < g.num_objects(); ++p) {
    os << " " << arrow(g.identity_table.at(p));
  }
  os << "\ninverses:";
  for (int a = 0; a < g.num_arrows(); ++a) {
    os << " " << arrow(g.inverse_table.at(a));
  }
  os << "\ncompose:\n";
  for (int a = 0; a < g.num_arrows(); ++a) {
    os << "  " << g.arrow_names[a] << " :";
    for (int b = 0; b < g.num_arrows(); ++b) {
      os << " " << arrow(g.compose(a, b));
    }
    os << "\n";
  }
  for (int n = 2; n <= c.dim; ++n) {
    auto const& l = c.layer(n);
    for (int p = 0; p < g.num_objects(); ++p) {
      auto const& t = l.groups[p];
      os << "group " << n << " " << g.object_names[p] << ":\n";
      for (int x = 0; x < t.size(); ++x) {
        os << "  " << t.names[x] << " :";
        for (int y : t.mul[x]) {
          os << " " << t.names.at(y);
        }
        os << "\n";
      }
    }
    for (int p = 0; p < g.num_objects(); ++p) {
      os << "boundary " << n << " " << g.object_names[p] << ":";
      for (int v : l.boundary[p]) {
        os << " " << (n == 2 ? arrow(v) : c.layer(n - 1).groups[p].names.at(v));
      }
      os << "\n";
    }
    os << "action " << n << ":\n";
    for (int a = 0; a < g.num_arrows(); ++a) {
      os << "  " << g.arrow_names[a] << " :";
      for (int v : l.action[a]) {
        os << " " << l.groups[g.dst(a)].names.at(v);
      }
      os << "\n";
    }
  }
}

std::string concrete_element_name(CrossedComplex const& c, int n, int g) {
  auto [p, e] = c.layer(n).locate(g);
  return c.layer(n).groups[p].names.at(e) + "@" + c.groupoid.object_names[p];
}

void write_morphism(std::ostringstream& os, XcrsDocument const& doc,
                    XcrsDocument::NamedMorphism const& m) {
  auto const& src = doc.complex(m.source);
  auto const& tgt = doc.complex(m.target);
  os << "morphism " << m.name << " " << m.source << " " << m.target << "\n";
  os << "objects:\n";
  for (std::size_t u = 0; u < m.map.object_map.size(); ++u) {
    os << "  " << src.object_names().at(u) << " : " << tgt.object_names().at(m.map.object_map[u])
       << "\n";
  }
  for (int n = 1; n <= static_cast<int>(m.map.cells.size()); ++n) {
    os << "cells " << n << ":\n";
    auto const& cells = m.map.cells[n - 1];
    for (std::size_t k = 0; k < cells.size(); ++k) {
      std::string label;
      if (src.regime == Regime::free) {
        label = n == 1 ? src.graph.edges.at(k).name : src.basis(n).names.at(k);
      } else {
        label = n == 1 ? src.groupoid.arrow_names.at(k)
                       : concrete_element_name(src, n, static_cast<int>(k));
      }
      os << "  " << label << " : ";
      auto const& img = cells[k];
      if (tgt.regime == Regime::concrete) {
        int const v = std::get<int>(img);
        os << (n == 1 ? tgt.groupoid.arrow_names.at(v) : concrete_element_name(tgt, n, v));
      } else if (n == 1) {
        os << word_tokens(tgt.graph, std::get<Word>(img));
      } else if (n == 2) {
        os << to_string(tgt, std::get<Elem2>(img));
      } else {
        os << to_string(tgt, n, std::get<ChainElem>(img));
      }
      os << "\n";
    }
  }
}

void write_cubical(std::ostringstream& os, std::string const& name, CubicalObject const& k) {
  auto ints = [&](std::vector<int> const& v) {
    for (int x : v) {
      os << " " << x;
    }
    os << "\n";
  };
  os << "cubical " << name << "\n";
  os << "top " << k.top << "\n";
  os << "sizes:";
  for (int n = 0; n <= k.top; ++n) {
    os << " " << k.sizes[n];
  }
  os << "\n";
  char const* sign[2] = {"-", "+"};
  for (int n = 1; n <= k.top; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int s = 0; s < 2; ++s) {
        os << "face " << n << " " << i << " " << sign[s] << ":";
        ints(k.faces[n][i - 1][s]);
      }
      os << "negative " << n << " " << i << ":";
      ints(k.negatives[n][i - 1]);
    }
  }
  for (int n = 0; n < k.top; ++n) {
    for (int i = 1; i <= n + 1; ++i) {
      os << "degeneracy " << n << " " << i << ":";
      ints(k.degeneracies[n][i - 1]);
    }
    for (int i = 1; i <= n; ++i) {
      for (int s = 0; s < 2; ++s) {
        os << "connection " << n << " " << i << " " << sign[s] << ":";
        ints(k.connections[n][i - 1][s]);
      }
    }
  }
  for (int n = 1; n <= k.top; ++n) {
    for (int i = 1; i <= n; ++i) {
      os << "compose " << n << " " << i << ":\n";
      std::map<std::uint64_t, int> sorted(k.compositions[n][i - 1].begin(),
                                          k.compositions[n][i - 1].end());
      for (auto const& [key, z] : sorted) {
        os << "  " << (key >> 32) << " " << (key & 0xffffffffu) << " " << z << "\n";
      }
    }
  }
  for (int n = 2; n <= k.top; ++n) {
    os << "thin " << n << ":";
    for (bool b : k.thin[n]) {
      os << " " << (b ? 1 : 0);
    }
    os << "\n";
  }
}

}  // namespace

XcrsDocument parse_xcrs(std::string const& text) { return Parser(text).run(); }

std::string serialize(XcrsDocument const& doc) {
  std::ostringstream os;
  os << "xcrs " << doc.version << "\n";
  for (auto const& c : doc.complexes) {
    write_complex(os, c.name, c.complex);
  }
  for (auto const& m : doc.morphisms) {
    write_morphism(os, doc, m);
  }
  for (auto const& k : doc.cubicals) {
    write_cubical(os, k.name, k.cubes);
  }
  return os.str();
}

std::string serialize(CrossedComplex const& c, std::string const& name) {
  XcrsDocument doc;
  doc.complexes.push_back({name, c});
  return serialize(doc);
}

XcrsDocument read_xcrs_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_xcrs(buf.str());
}

void write_text_file(std::filesystem::path const& path, std::string const& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) {
    throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace xcrs
