#pragma once

#include <compare>
#include <string>
#include <vector>

namespace xcrs {

struct Edge {
  int         src = 0;
  int         dst = 0;
  std::string name;
};

// Finite directed graph; the free groupoid on it has reduced words as arrows.
struct Graph {
  std::vector<std::string> vertex_names;
  std::vector<Edge>        edges;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int vertex_index(std::string const& name) const;  // -1 if absent
  int edge_index(std::string const& name) const;
};

struct Letter {
  int  edge    = 0;
  bool inverse = false;

  Letter inverted() const { return {edge, !inverse}; }
  auto   operator<=>(Letter const&) const = default;
};

// A path in the graph starting at `start`. Words with no letters are the
// identities.
struct Word {
  int                 start = 0;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  auto operator<=>(Word const&) const = default;
};

int letter_src(Graph const& g, Letter l);
int letter_dst(Graph const& g, Letter l);

// End vertex. Throws DomainError on an endpoint mismatch.
int word_end(Graph const& g, Word const& w);

// Freely reduced form by single-pass stack cancellation. Throws DomainError
// on an endpoint mismatch.
Word reduce(Graph const& g, Word const& w);
bool is_reduced(Word const& w);

Word identity_word(int vertex);
Word edge_word(Graph const& g, int edge, bool inverse = false);
// Reduced product "a then b"; throws DomainError unless end(a) == start(b).
Word concat(Graph const& g, Word const& a, Word const& b);
Word inverse(Graph const& g, Word const& w);

std::string to_string(Graph const& g, Word const& w);

}  // namespace xcrs
