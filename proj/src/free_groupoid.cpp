#include "xcrs/free_groupoid.hpp"

#include <algorithm>

#include "xcrs/report.hpp"

namespace xcrs {

int Graph::vertex_index(std::string const& name) const {
  auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
  return it == vertex_names.end() ? -1 : static_cast<int>(it - vertex_names.begin());
}

int Graph::edge_index(std::string const& name) const {
  for (int e = 0; e < num_edges(); ++e) {
    if (edges[e].name == name) {
      return e;
    }
  }
  return -1;
}

int letter_src(Graph const& g, Letter l) {
  auto const& e = g.edges.at(l.edge);
  return l.inverse ? e.dst : e.src;
}

int letter_dst(Graph const& g, Letter l) {
  auto const& e = g.edges.at(l.edge);
  return l.inverse ? e.src : e.dst;
}

int word_end(Graph const& g, Word const& w) {
  int at = w.start;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    Letter l = w.letters[i];
    if (l.edge < 0 || l.edge >= g.num_edges()) {
      throw DomainError("word: unknown edge id " + std::to_string(l.edge));
    }
    if (letter_src(g, l) != at) {
      throw DomainError("word: endpoint mismatch at letter "
                        + std::to_string(i) + " (" + g.edges[l.edge].name + ")");
    }
    at = letter_dst(g, l);
  }
  return at;
}

Word reduce(Graph const& g, Word const& w) {
  word_end(g, w);
  Word out{w.start, {}};
  out.letters.reserve(w.letters.size());
  for (Letter l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverted()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

bool is_reduced(Word const& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i) {
    if (w.letters[i] == w.letters[i - 1].inverted()) {
      return false;
    }
  }
  return true;
}

Word identity_word(int vertex) { return Word{vertex, {}}; }

Word edge_word(Graph const& g, int edge, bool inverse) {
  Letter l{edge, inverse};
  return Word{letter_src(g, l), {l}};
}

Word concat(Graph const& g, Word const& a, Word const& b) {
  if (word_end(g, a) != b.start) {
    throw DomainError("word product: " + to_string(g, a) + " does not end where "
                      + to_string(g, b) + " starts");
  }
  Word out = a;
  for (Letter l : b.letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverted()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word inverse(Graph const& g, Word const& w) {
  Word out{word_end(g, w), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverted());
  }
  return out;
}

std::string to_string(Graph const& g, Word const& w) {
  if (w.letters.empty()) {
    return "1_" + g.vertex_names.at(w.start);
  }
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) {
      s += '.';
    }
    s += g.edges.at(w.letters[i].edge).name;
    if (w.letters[i].inverse) {
      s += "^-1";
    }
  }
  return s;
}

}  // namespace xcrs
