#pragma once

// Independent reference computations shared by the unit and acceptance
// tests. They use brute force where the library uses structure.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <numeric>
#include <vector>

#include "xcrs/crossed_complex.hpp"
#include "xcrs/crossed_morphism.hpp"
#include "xcrs/homology.hpp"

namespace oracle {

using xcrs::CrossedComplex;
using xcrs::CrossedMorphism;
using xcrs::Integer;
using xcrs::IntMatrix;

// Value of a word in a concrete groupoid, given images of the edges.
inline int evaluate(xcrs::FiniteGroupoid const& g, int start_object, std::vector<int> const& edge_image,
                    xcrs::Word const& w) {
  int acc = g.identity(start_object);
  for (auto const& l : w.letters) {
    int const a = l.inverse ? g.inverse(edge_image[l.edge]) : edge_image[l.edge];
    acc         = g.compose(acc, a);
    if (acc < 0) {
      return -1;
    }
  }
  return acc;
}

// Every morphism from a free complex of dimension <= 2 into a concrete
// complex, by exhaustive search over objects, arrows and elements.
inline std::vector<CrossedMorphism> all_morphisms(CrossedComplex const& f, CrossedComplex const& c) {
  std::vector<CrossedMorphism> out;
  auto const&                  g = c.groupoid;
  int const                    objects = f.graph.num_vertices();
  int const                    edges   = f.graph.num_edges();
  CrossedMorphism              m;
  m.object_map.assign(objects, 0);
  m.cells.assign(f.dim, {});
  std::vector<int> edge_image(edges, 0);

  std::function<void(int)> basis2 = [&](int b) {
    if (f.dim < 2 || b == f.basis(2).size()) {
      m.cells[0].assign(edge_image.begin(), edge_image.end());
      out.push_back(m);
      return;
    }
    int const  u      = f.basis(2).base[b];
    int const  p      = m.object_map[u];
    auto const target = evaluate(g, p, edge_image, std::get<xcrs::Word>(f.basis(2).boundary[b]));
    auto const& layer = c.layer(2);
    for (int k = 0; k < layer.groups[p].size(); ++k) {
      if (layer.boundary[p][k] == target) {
        m.cells[1][b] = layer.global(p, k);
        basis2(b + 1);
      }
    }
  };
  std::function<void(int)> edge = [&](int e) {
    if (e == edges) {
      if (f.dim >= 2) {
        m.cells[1].assign(f.basis(2).size(), 0);
      }
      basis2(0);
      return;
    }
    auto const& ed = f.graph.edges[e];
    for (int a : g.hom(m.object_map[ed.src], m.object_map[ed.dst])) {
      edge_image[e] = a;
      edge(e + 1);
    }
  };
  std::function<void(int)> object = [&](int u) {
    if (u == objects) {
      edge(0);
      return;
    }
    for (int p = 0; p < c.num_objects(); ++p) {
      m.object_map[u] = p;
      object(u + 1);
    }
  };
  object(0);
  return out;
}

// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(std::vector<std::vector<Integer>> a) {
  int const n = static_cast<int>(a.size());
  Integer   prev = 1;
  int       sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) {
        ++r;
      }
      if (r == n) {
        return 0;
      }
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * (n == 0 ? Integer(1) : a[n - 1][n - 1]);
}

// D_k = gcd of all k x k minors, for k = 0 .. min(rows, cols); D_0 = 1.
inline std::vector<Integer> determinantal_divisors(IntMatrix const& m) {
  int const            kmax = std::min(m.rows(), m.cols());
  std::vector<Integer> out{1};
  for (int k = 1; k <= kmax; ++k) {
    Integer          g = 0;
    std::vector<int> rows(k), cols(k);
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int i, int from) {
      if (i == k) {
        pick_cols(0, 0);
        return;
      }
      for (int r = from; r < m.rows(); ++r) {
        rows[i] = r;
        pick_rows(i + 1, r + 1);
      }
    };
    pick_cols = [&](int j, int from) {
      if (j == k) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (int a = 0; a < k; ++a) {
          for (int b = 0; b < k; ++b) {
            sub[a][b] = m.at(rows[a], cols[b]);
          }
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(determinant(sub))).get_mpz_t());
        return;
      }
      for (int c = from; c < m.cols(); ++c) {
        cols[j] = c;
        pick_cols(j + 1, c + 1);
      }
    };
    pick_rows(0, 0);
    out.push_back(g);
  }
  return out;
}

// Rank and invariant factors (> 1) of a matrix from its determinantal divisors.
struct MatrixInvariants {
  int                  rank = 0;
  std::vector<Integer> torsion;
};

inline MatrixInvariants matrix_invariants(IntMatrix const& m) {
  auto const       d = determinantal_divisors(m);
  MatrixInvariants out;
  for (std::size_t k = 1; k < d.size() && d[k] != 0; ++k) {
    out.rank = static_cast<int>(k);
    Integer const factor = d[k] / d[k - 1];
    if (factor > 1) {
      out.torsion.push_back(factor);
    }
  }
  return out;
}

// H_n of a chain complex: rank ker d_n - rank d_{n+1}, torsion of d_{n+1}.
inline xcrs::AbelianGroup chain_homology(xcrs::IntChainComplex const& c, int n) {
  int const in_rank  = n >= 1 ? matrix_invariants(c.boundary[n - 1]).rank : 0;
  auto const out     = n < c.top() ? matrix_invariants(c.boundary[n]) : MatrixInvariants{};
  xcrs::AbelianGroup h;
  h.rank    = c.ranks[n] - in_rank - out.rank;
  h.torsion = out.torsion;
  return h;
}

// |H_n(C; Z/m)| by enumerating (Z/m)^rank: kernel of d_n over image of d_{n+1}.
inline long mod_homology_order(xcrs::IntChainComplex const& c, int n, int m) {
  auto vectors = [m](int r) {
    std::vector<std::vector<long>> out{std::vector<long>(r, 0)};
    for (int i = 0; i < r; ++i) {
      std::vector<std::vector<long>> next;
      for (auto const& v : out) {
        for (long x = 0; x < m; ++x) {
          auto w = v;
          w[i]   = x;
          next.push_back(w);
        }
      }
      out = std::move(next);
    }
    return out;
  };
  auto apply = [m](IntMatrix const& d, std::vector<long> const& v) {
    std::vector<long> out(d.rows(), 0);
    for (int i = 0; i < d.rows(); ++i) {
      Integer s = 0;
      for (int j = 0; j < d.cols(); ++j) {
        s += d.at(i, j) * v[j];
      }
      Integer r = s % m;
      out[i]    = (r < 0 ? r + m : r).get_si();
    }
    return out;
  };
  long kernel = 0;
  for (auto const& v : vectors(c.ranks[n])) {
    if (n == 0) {
      ++kernel;
      continue;
    }
    auto const w = apply(c.boundary[n - 1], v);
    kernel += std::all_of(w.begin(), w.end(), [](long x) { return x == 0; }) ? 1 : 0;
  }
  std::set<std::vector<long>> image;
  if (n < c.top()) {
    for (auto const& v : vectors(c.ranks[n + 1])) {
      image.insert(apply(c.boundary[n], v));
    }
  } else {
    image.insert(std::vector<long>(c.ranks[n], 0));
  }
  return kernel / static_cast<long>(image.size());
}

// Universal coefficients: |H_n(C; Z/m)| = |H_n (x) Z/m| * |Tor(H_{n-1}, Z/m)|.
inline long mod_homology_prediction(xcrs::AbelianGroup const& h, xcrs::AbelianGroup const* below,
                                    int m) {
  long order = 1;
  for (int i = 0; i < h.rank; ++i) {
    order *= m;
  }
  for (auto const& t : h.torsion) {
    order *= std::gcd(t.get_si(), static_cast<long>(m));
  }
  if (below != nullptr) {
    for (auto const& t : below->torsion) {
      order *= std::gcd(t.get_si(), static_cast<long>(m));
    }
  }
  return order;
}

// Chain complex with ranks in [1, 3] and entries in [-2, 2]; each d_{n+1}
// takes its columns from the kernel vectors of d_n in that box, so d d = 0.
inline xcrs::IntChainComplex random_chain_complex(std::mt19937& rng, int top = 3) {
  std::uniform_int_distribution<int> rank(1, 3), entry(-2, 2);
  xcrs::IntChainComplex              c;
  for (int n = 0; n <= top; ++n) {
    c.ranks.push_back(rank(rng));
  }
  std::vector<std::vector<long>> d(c.ranks[0], std::vector<long>(c.ranks[1]));
  for (auto& row : d) {
    for (auto& x : row) {
      x = entry(rng);
    }
  }
  c.boundary.emplace_back(d);
  for (int n = 2; n <= top; ++n) {
    auto const&                    prev = c.boundary.back();
    std::vector<std::vector<long>> kernel;
    std::vector<long>              v(c.ranks[n - 1], -2);
    for (;;) {
      bool zero = true;
      for (int i = 0; i < prev.rows() && zero; ++i) {
        Integer s = 0;
        for (int j = 0; j < prev.cols(); ++j) {
          s += prev.at(i, j) * v[j];
        }
        zero = s == 0;
      }
      if (zero) {
        kernel.push_back(v);
      }
      std::size_t k = 0;
      while (k < v.size() && v[k] == 2) {
        v[k++] = -2;
      }
      if (k == v.size()) {
        break;
      }
      ++v[k];
    }
    std::uniform_int_distribution<std::size_t> pick(0, kernel.size() - 1);
    std::vector<std::vector<long>> next(c.ranks[n - 1], std::vector<long>(c.ranks[n]));
    for (int j = 0; j < c.ranks[n]; ++j) {
      auto const& col = kernel[pick(rng)];
      for (int i = 0; i < c.ranks[n - 1]; ++i) {
        next[i][j] = col[i];
      }
    }
    c.boundary.emplace_back(next);
  }
  return c;
}

}  // namespace oracle
