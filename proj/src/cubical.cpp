#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xcrs/cubical.hpp"

namespace xcrs {

int CubicalObject::compose(int n, int i, int x, int y) const {
  auto const& table = compositions[n][i - 1];
  auto        it    = table.find(pair_key(x, y));
  return it == table.end() ? -1 : it->second;
}

std::string to_string(CubicalOp const& op) {
  std::string const sign = op.sign == 0 ? "-" : "+";
  std::string const i    = std::to_string(op.i);
  switch (op.kind) {
    case CubicalOp::Kind::face: return "d" + i + sign;
    case CubicalOp::Kind::degeneracy: return "e" + i;
    case CubicalOp::Kind::connection: return "G" + i + sign;
    case CubicalOp::Kind::negative: return "n" + i;
  }
  return "?";
}

std::string to_string(UnaryLaw const& law) {
  auto word = [](std::vector<CubicalOp> const& w) {
    if (w.empty()) {
      return std::string("id");
    }
    std::string out;
    for (auto const& op : w) {
      out += (out.empty() ? "" : " ") + to_string(op);
    }
    return out;
  };
  return law.name + ": " + word(law.lhs) + " = " + word(law.rhs) + " on K"
         + std::to_string(law.dim);
}

namespace {

using Op   = CubicalOp;
using Kind = CubicalOp::Kind;

Op d(int i, int s) { return {Kind::face, i, s}; }
Op e(int i) { return {Kind::degeneracy, i, 0}; }
Op g(int i, int s) { return {Kind::connection, i, s}; }
Op neg(int i) { return {Kind::negative, i, 0}; }

// Dimension after applying `w` (right to left) to K_n, or -1 when some
// operator is out of range below `top`.
int word_dim(std::vector<Op> const& w, int n, int top) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind) {
      case Kind::face:
        if (it->i < 1 || it->i > n) return -1;
        --n;
        break;
      case Kind::degeneracy:
        if (it->i < 1 || it->i > n + 1 || n + 1 > top) return -1;
        ++n;
        break;
      case Kind::connection:
        if (it->i < 1 || it->i > n || n + 1 > top) return -1;
        ++n;
        break;
      case Kind::negative:
        if (it->i < 1 || it->i > n) return -1;
        break;
    }
  }
  return n;
}

int apply(CubicalObject const& k, std::vector<Op> const& w, int n, int x) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind) {
      case Kind::face: x = k.face(n, it->i, it->sign, x); --n; break;
      case Kind::degeneracy: x = k.degeneracy(n, it->i, x); ++n; break;
      case Kind::connection: x = k.connection(n, it->i, it->sign, x); ++n; break;
      case Kind::negative: x = k.negative(n, it->i, x); break;
    }
  }
  return x;
}

std::string cell(int n, int x) { return "K" + std::to_string(n) + "#" + std::to_string(x); }

}  // namespace

std::vector<UnaryLaw> unary_laws(int top) {
  std::vector<UnaryLaw> out;
  auto add = [&](std::string name, std::vector<Op> lhs, std::vector<Op> rhs) {
    for (int n = 0; n <= top; ++n) {
      int const a = word_dim(lhs, n, top);
      int const b = word_dim(rhs, n, top);
      if (a >= 0 && a == b) {
        out.push_back({name, n, lhs, rhs});
      }
    }
  };
  int const m = top + 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          if (i < j) {
            add("face face", {d(i, s), d(j, t)}, {d(j - 1, t), d(i, s)});
            add("connection connection", {g(i, s), g(j, t)}, {g(j + 1, t), g(i, s)});
          }
          // faces of connections
          if (j < i) {
            add("face connection", {d(j, t), g(i, s)}, {g(i - 1, s), d(j, t)});
          } else if (j == i || j == i + 1) {
            if (t == s) {
              add("face connection", {d(j, t), g(i, s)}, {});
            } else {
              add("face connection", {d(j, t), g(i, s)}, {e(i), d(i, t)});
            }
          } else {
            add("face connection", {d(j, t), g(i, s)}, {g(i, s), d(j - 1, t)});
          }
        }
        if (i < j) {
          add("face degeneracy", {d(j, s), e(i)}, {e(i), d(j - 1, s)});
          add("negative face", {d(j, s), neg(i)}, {neg(i), d(j, s)});
        } else if (i == j) {
          add("face degeneracy", {d(j, s), e(i)}, {});
          add("negative face", {d(i, s), neg(i)}, {d(i, 1 - s)});
        } else {
          add("face degeneracy", {d(j, s), e(i)}, {e(i - 1), d(j, s)});
          add("negative face", {d(j, s), neg(i)}, {neg(i - 1), d(j, s)});
        }
        if (i < j) {
          add("connection degeneracy", {g(i, s), e(j)}, {e(j + 1), g(i, s)});
        } else if (i == j) {
          add("connection degeneracy", {g(i, s), e(i)}, {e(i), e(i)});
        } else {
          add("connection degeneracy", {g(i, s), e(j)}, {e(j), g(i - 1, s)});
        }
        if (j < i) {
          add("negative connection", {neg(j), g(i, s)}, {g(i, s), neg(j)});
        } else if (j > i + 1) {
          add("negative connection", {neg(j), g(i, s)}, {g(i, s), neg(j - 1)});
        }
      }
      if (i <= j) {
        add("degeneracy degeneracy", {e(i), e(j)}, {e(j + 1), e(i)});
      }
      if (i < j) {
        add("negatives commute", {neg(i), neg(j)}, {neg(j), neg(i)});
      }
      if (j < i) {
        add("negative degeneracy", {neg(i), e(j)}, {e(j), neg(i - 1)});
      } else if (j == i) {
        add("negative degeneracy", {neg(i), e(i)}, {e(i)});
      } else {
        add("negative degeneracy", {neg(i), e(j)}, {e(j), neg(i)});
      }
    }
    for (int s = 0; s < 2; ++s) {
      add("connection connection", {g(i, s), g(i, s)}, {g(i + 1, s), g(i, s)});
    }
    add("negative involution", {neg(i), neg(i)}, {});
    add("transport", {g(i, 1)}, {neg(i), neg(i + 1), g(i, 0), neg(i)});
  }
  return out;
}

namespace {

// Budget for laws quantified over three or four composable elements; above
// it the instances are sampled with a fixed seed.
constexpr long grid_budget = 200000;

struct LawChecker {
  CubicalObject const& k;
  Report&              r;

  void check_tables() {
    if (k.top < 0 || k.top > max_cubical_dim) {
      r.malformed("truncation dimension out of range");
      return;
    }
    auto in_range = [&](std::vector<int> const& v, int size, int range, std::string const& what) {
      if (static_cast<int>(v.size()) != size) {
        r.malformed(what + ": wrong length");
        return;
      }
      for (int x : v) {
        if (x < 0 || x >= range) {
          r.malformed(what + ": value out of range");
          return;
        }
      }
    };
    for (int n = 1; n <= k.top; ++n) {
      if (static_cast<int>(k.faces[n].size()) != n || static_cast<int>(k.negatives[n].size()) != n
          || static_cast<int>(k.compositions[n].size()) != n) {
        r.malformed("K" + std::to_string(n) + ": wrong number of operators");
        continue;
      }
      for (int i = 1; i <= n; ++i) {
        for (int s = 0; s < 2; ++s) {
          in_range(k.faces[n][i - 1][s], k.sizes[n], k.sizes[n - 1],
                   "face " + to_string(d(i, s)) + " on K" + std::to_string(n));
        }
        in_range(k.negatives[n][i - 1], k.sizes[n], k.sizes[n],
                 "negative " + std::to_string(i) + " on K" + std::to_string(n));
      }
    }
    for (int n = 0; n < k.top; ++n) {
      if (static_cast<int>(k.degeneracies[n].size()) != n + 1
          || static_cast<int>(k.connections[n].size()) != (n >= 1 ? n : 0)) {
        r.malformed("K" + std::to_string(n) + ": wrong number of degeneracies or connections");
        continue;
      }
      for (int i = 1; i <= n + 1; ++i) {
        in_range(k.degeneracies[n][i - 1], k.sizes[n], k.sizes[n + 1],
                 "degeneracy " + std::to_string(i) + " on K" + std::to_string(n));
      }
      for (int i = 1; i <= n && n >= 1; ++i) {
        for (int s = 0; s < 2; ++s) {
          in_range(k.connections[n][i - 1][s], k.sizes[n], k.sizes[n + 1],
                   "connection " + to_string(g(i, s)) + " on K" + std::to_string(n));
        }
      }
    }
    for (int n = 2; n <= k.top; ++n) {
      if (static_cast<int>(k.thin[n].size()) != k.sizes[n]) {
        r.malformed("thin flags on K" + std::to_string(n) + ": wrong length");
      }
    }
    if (!r.structurally_ok()) {
      return;
    }
    for (int n = 1; n <= k.top; ++n) {
      for (int i = 1; i <= n; ++i) {
        long composable = 0;
        std::map<int, long> lower;
        for (int y = 0; y < k.sizes[n]; ++y) {
          ++lower[k.face(n, i, 0, y)];
        }
        for (int x = 0; x < k.sizes[n]; ++x) {
          auto it = lower.find(k.face(n, i, 1, x));
          composable += it == lower.end() ? 0 : it->second;
        }
        for (auto const& [key, z] : k.compositions[n][i - 1]) {
          int const x = static_cast<int>(key >> 32);
          int const y = static_cast<int>(key & 0xffffffffu);
          if (x < 0 || x >= k.sizes[n] || y < 0 || y >= k.sizes[n] || z < 0 || z >= k.sizes[n]) {
            r.malformed("composition " + std::to_string(i) + " on K" + std::to_string(n)
                        + ": id out of range");
            return;
          }
          if (k.face(n, i, 1, x) != k.face(n, i, 0, y)) {
            r.malformed("composition " + std::to_string(i) + " on K" + std::to_string(n)
                        + " defined off composable pairs at (" + cell(n, x) + ", " + cell(n, y) + ")");
            return;
          }
        }
        if (static_cast<long>(k.compositions[n][i - 1].size()) != composable) {
          r.fail("composition total on composable pairs",
                 "o" + std::to_string(i) + " on K" + std::to_string(n) + " misses "
                     + std::to_string(composable - static_cast<long>(k.compositions[n][i - 1].size()))
                     + " pairs");
        }
      }
    }
  }

  void check_unary() {
    for (auto const& law : unary_laws(k.top)) {
      for (int x = 0; x < k.sizes[law.dim] && !r.saturated(); ++x) {
        if (apply(k, law.lhs, law.dim, x) != apply(k, law.rhs, law.dim, x)) {
          r.fail(to_string(law), "at " + cell(law.dim, x));
          break;
        }
      }
    }
  }

  // Visits every composable pair (x, y) in direction i of K_n.
  template <typename Visit>
  void pairs(int n, int i, Visit&& visit) {
    for (auto const& [key, z] : k.compositions[n][i - 1]) {
      visit(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), z);
    }
  }

  void expect(bool ok, std::string const& law, std::string const& witness) {
    if (!ok && !r.saturated()) {
      r.fail(law, witness);
    }
  }

  void check_composites() {
    for (int n = 1; n <= k.top; ++n) {
      for (int i = 1; i <= n; ++i) {
        std::string const oi = "o" + std::to_string(i) + " on K" + std::to_string(n);
        pairs(n, i, [&](int x, int y, int z) {
          std::string const at = " at (" + cell(n, x) + ", " + cell(n, y) + ")";
          expect(k.face(n, i, 0, z) == k.face(n, i, 0, x), "d- of composite " + oi, at);
          expect(k.face(n, i, 1, z) == k.face(n, i, 1, y), "d+ of composite " + oi, at);
          for (int j = 1; j <= n; ++j) {
            if (j == i) {
              continue;
            }
            int const ij = j < i ? i - 1 : i;
            for (int s = 0; s < 2; ++s) {
              int const fx = k.face(n, j, s, x), fy = k.face(n, j, s, y);
              expect(k.face(n, j, s, z) == k.compose(n - 1, ij, fx, fy),
                     "d" + std::to_string(j) + " of composite " + oi, at);
            }
            expect(k.negative(n, j, z) == k.compose(n, i, k.negative(n, j, x), k.negative(n, j, y)),
                   "n" + std::to_string(j) + " of composite " + oi, at);
          }
          expect(k.negative(n, i, z) == k.compose(n, i, k.negative(n, i, y), k.negative(n, i, x)),
                 "n" + std::to_string(i) + " reverses composite " + oi, at);
          if (n < k.top) {
            for (int j = 1; j <= n + 1; ++j) {
              int const ij = j <= i ? i + 1 : i;
              expect(k.degeneracy(n, j, z)
                         == k.compose(n + 1, ij, k.degeneracy(n, j, x), k.degeneracy(n, j, y)),
                     "e" + std::to_string(j) + " of composite " + oi, at);
            }
            check_connections_of_composite(n, i, x, y, z, at);
          }
          if (n >= 2 && k.is_thin(n, x) && k.is_thin(n, y)) {
            expect(k.is_thin(n, z), "composite of thin elements is thin", oi + at);
          }
        });
        for (int x = 0; x < k.sizes[n] && !r.saturated(); ++x) {
          std::string const at = " at " + cell(n, x);
          int const lo = k.face(n, i, 0, x), hi = k.face(n, i, 1, x);
          expect(k.compose(n, i, x, k.degeneracy(n - 1, i, hi)) == x, "right unit " + oi, at);
          expect(k.compose(n, i, k.degeneracy(n - 1, i, lo), x) == x, "left unit " + oi, at);
          int const inv = k.negative(n, i, x);
          expect(k.compose(n, i, x, inv) == k.degeneracy(n - 1, i, lo), "right inverse " + oi, at);
          expect(k.compose(n, i, inv, x) == k.degeneracy(n - 1, i, hi), "left inverse " + oi, at);
          if (n >= 1 && n < k.top) {
            int const gp = k.connection(n, i, 1, x), gm = k.connection(n, i, 0, x);
            expect(k.compose(n + 1, i, gp, gm) == k.degeneracy(n, i + 1, x),
                   "G+ o_i G- = e_(i+1)", "on K" + std::to_string(n) + at);
            expect(k.compose(n + 1, i + 1, gp, gm) == k.degeneracy(n, i, x),
                   "G+ o_(i+1) G- = e_i", "on K" + std::to_string(n) + at);
          }
          if (n >= 2 && k.is_thin(n, x)) {
            expect(k.is_thin(n, inv), "negative of thin element is thin", oi + at);
          }
        }
      }
    }
  }

  void check_connections_of_composite(int n, int i, int x, int y, int z, std::string const& at) {
    for (int c = 1; c <= n; ++c) {
      for (int s = 0; s < 2; ++s) {
        std::string const law = to_string(g(c, s)) + " of composite o" + std::to_string(i) + " on K"
                                + std::to_string(n);
        int const gz = k.connection(n, c, s, z);
        if (c != i) {
          int const ic = i < c ? i : i + 1;
          expect(gz == k.compose(n + 1, ic, k.connection(n, c, s, x), k.connection(n, c, s, y)), law,
                 at);
          continue;
        }
        int lower = 0, upper = 0;
        if (s == 0) {
          lower = k.compose(n + 1, i, k.connection(n, i, 0, x), k.degeneracy(n, i + 1, y));
          upper = k.compose(n + 1, i, k.degeneracy(n, i, y), k.connection(n, i, 0, y));
        } else {
          lower = k.compose(n + 1, i, k.connection(n, i, 1, x), k.degeneracy(n, i, x));
          upper = k.compose(n + 1, i, k.degeneracy(n, i + 1, x), k.connection(n, i, 1, y));
        }
        expect(lower >= 0 && upper >= 0 && gz == k.compose(n + 1, i + 1, lower, upper), law, at);
      }
    }
  }

  // Associativity and interchange; sampled above grid_budget.
  void check_grids() {
    std::mt19937 rng(20240611u);
    for (int n = 1; n <= k.top; ++n) {
      std::vector<std::map<int, std::vector<int>>> by_lower(n + 1);
      for (int i = 1; i <= n; ++i) {
        for (int y = 0; y < k.sizes[n]; ++y) {
          by_lower[i][k.face(n, i, 0, y)].push_back(y);
        }
      }
      auto next = [&](int i, int x) -> std::vector<int> const& {
        static std::vector<int> const none;
        auto it = by_lower[i].find(k.face(n, i, 1, x));
        return it == by_lower[i].end() ? none : it->second;
      };
      for (int i = 1; i <= n; ++i) {
        long triples = 0;
        for (int x = 0; x < k.sizes[n]; ++x) {
          for (int y : next(i, x)) {
            triples += static_cast<long>(next(i, y).size());
          }
        }
        auto assoc = [&](int x, int y, int z) {
          int const xy = k.compose(n, i, x, y), yz = k.compose(n, i, y, z);
          expect(k.compose(n, i, xy, z) == k.compose(n, i, x, yz),
                 "associativity o" + std::to_string(i) + " on K" + std::to_string(n),
                 "at (" + cell(n, x) + ", " + cell(n, y) + ", " + cell(n, z) + ")");
        };
        if (triples <= grid_budget) {
          for (int x = 0; x < k.sizes[n] && !r.saturated(); ++x) {
            for (int y : next(i, x)) {
              for (int z : next(i, y)) {
                assoc(x, y, z);
              }
            }
          }
        } else {
          for (long t = 0; t < grid_budget && !r.saturated(); ++t) {
            int const x  = static_cast<int>(rng() % k.sizes[n]);
            auto const& ys = next(i, x);
            int const y  = ys[rng() % ys.size()];
            auto const& zs = next(i, y);
            assoc(x, y, zs[rng() % zs.size()]);
          }
        }
        for (int j = i + 1; j <= n; ++j) {
          // x y over z w: x o_i y, z o_i w, x o_j z, y o_j w
          auto interchange = [&](int x, int y, int z) {
            auto const& ws = next(j, y);
            for (int w : ws) {
              if (k.face(n, i, 1, z) != k.face(n, i, 0, w)) {
                continue;
              }
              int const lhs = k.compose(n, j, k.compose(n, i, x, y), k.compose(n, i, z, w));
              int const rhs = k.compose(n, i, k.compose(n, j, x, z), k.compose(n, j, y, w));
              expect(lhs == rhs,
                     "interchange o" + std::to_string(i) + " o" + std::to_string(j) + " on K"
                         + std::to_string(n),
                     "at (" + cell(n, x) + ", " + cell(n, y) + ", " + cell(n, z) + ", "
                         + cell(n, w) + ")");
            }
          };
          long grids = 0;
          for (int x = 0; x < k.sizes[n]; ++x) {
            for (int y : next(i, x)) {
              grids += static_cast<long>(next(j, x).size()) * static_cast<long>(next(j, y).size());
            }
          }
          if (grids <= grid_budget) {
            for (int x = 0; x < k.sizes[n] && !r.saturated(); ++x) {
              for (int y : next(i, x)) {
                for (int z : next(j, x)) {
                  interchange(x, y, z);
                }
              }
            }
          } else {
            for (long t = 0; t < grid_budget / 8 && !r.saturated(); ++t) {
              int const x  = static_cast<int>(rng() % k.sizes[n]);
              auto const& ys = next(i, x);
              auto const& zs = next(j, x);
              interchange(x, ys[rng() % ys.size()], zs[rng() % zs.size()]);
            }
          }
        }
      }
    }
  }

  void check_thin() {
    for (int n = 2; n <= k.top; ++n) {
      for (int x = 0; x < k.sizes[n - 1] && !r.saturated(); ++x) {
        for (int i = 1; i <= n; ++i) {
          expect(k.is_thin(n, k.degeneracy(n - 1, i, x)), "degenerate elements are thin",
                 "e" + std::to_string(i) + " of " + cell(n - 1, x));
        }
        for (int i = 1; i <= n - 1; ++i) {
          for (int s = 0; s < 2; ++s) {
            expect(k.is_thin(n, k.connection(n - 1, i, s, x)), "connections are thin",
                   to_string(g(i, s)) + " of " + cell(n - 1, x));
          }
        }
      }
    }
    if (k.top == 3) {
      for (int x = 0; x < k.sizes[3] && !r.saturated(); ++x) {
        if (!k.is_thin(3, x)) {
          continue;
        }
        int thin_faces = 0;
        for (int i = 1; i <= 3; ++i) {
          for (int s = 0; s < 2; ++s) {
            thin_faces += k.is_thin(2, k.face(3, i, s, x)) ? 1 : 0;
          }
        }
        expect(thin_faces != 5, "all but one face thin forces the last face thin", "at " + cell(3, x));
      }
    }
  }
};

std::vector<int> box_key(Box const& b) {
  std::vector<int> key{b.omit_i, b.omit_sign};
  for (auto const& f : b.faces) {
    key.push_back(f[0]);
    key.push_back(f[1]);
  }
  return key;
}

}  // namespace

Report check_cubical_laws(CubicalObject const& k) {
  Report      r;
  LawChecker  c{k, r};
  c.check_tables();
  if (!r.structurally_ok()) {
    return r;
  }
  c.check_unary();
  c.check_composites();
  c.check_grids();
  c.check_thin();
  if (r.pass()) {
    r.merge(check_unique_thin_fillers(k));
  }
  return r;
}

bool Box::compatible(CubicalObject const& k) const {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          int const x = faces[i - 1][s], y = faces[j - 1][t];
          if (x < 0 || y < 0 || n < 2) {
            continue;
          }
          // d_i^s d_j^t = d_{j-1}^t d_i^s
          if (k.face(n - 1, i, s, y) != k.face(n - 1, j - 1, t, x)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Box box_of(CubicalObject const& k, int n, int x, int omit_i, int omit_sign) {
  Box b;
  b.n         = n;
  b.omit_i    = omit_i;
  b.omit_sign = omit_sign;
  b.faces.assign(n, {-1, -1});
  for (int i = 1; i <= n; ++i) {
    for (int s = 0; s < 2; ++s) {
      if (i != omit_i || s != omit_sign) {
        b.faces[i - 1][s] = k.face(n, i, s, x);
      }
    }
  }
  return b;
}

int thin_filler(CubicalObject const& k, Box const& b) {
  if (b.n < 2 || b.n > k.top) {
    throw DomainError("thin fillers exist for boxes of dimension 2.." + std::to_string(k.top));
  }
  if (!b.compatible(k)) {
    throw DomainError("box faces are not compatible");
  }
  int found = -1, count = 0;
  for (int x = 0; x < k.sizes[b.n]; ++x) {
    if (k.is_thin(b.n, x) && box_key(box_of(k, b.n, x, b.omit_i, b.omit_sign)) == box_key(b)) {
      found = x;
      ++count;
    }
  }
  if (count != 1) {
    throw DomainError("box has " + std::to_string(count) + " thin fillers");
  }
  return found;
}

Report check_unique_thin_fillers(CubicalObject const& k) {
  Report r;
  for (int n = 2; n <= k.top; ++n) {
    std::map<std::vector<int>, int> fillers;
    for (int x = 0; x < k.sizes[n]; ++x) {
      if (!k.is_thin(n, x)) {
        continue;
      }
      for (int i = 1; i <= n; ++i) {
        for (int s = 0; s < 2; ++s) {
          ++fillers[box_key(box_of(k, n, x, i, s))];
        }
      }
    }
    for_each_box(k, n, [&](Box const& b) {
      auto it    = fillers.find(box_key(b));
      int  count = it == fillers.end() ? 0 : it->second;
      if (count != 1 && !r.saturated()) {
        std::ostringstream w;
        w << n << "-box omitting d" << b.omit_i << (b.omit_sign == 0 ? "-" : "+") << " has "
          << count << " thin fillers";
        r.fail("unique thin filler", w.str());
      }
    });
  }
  return r;
}

Report check_cubical_map(CubicalObject const& src, CubicalObject const& tgt, CubicalMap const& p) {
  Report    r;
  int const top = std::min(src.top, tgt.top);
  for (int n = 0; n <= top; ++n) {
    if (static_cast<int>(p.map[n].size()) != src.sizes[n]) {
      r.malformed("map on K" + std::to_string(n) + ": wrong length");
      return r;
    }
    for (int y : p.map[n]) {
      if (y < 0 || y >= tgt.sizes[n]) {
        r.malformed("map on K" + std::to_string(n) + ": value out of range");
        return r;
      }
    }
  }
  auto expect = [&](bool ok, std::string const& law, int n, int x) {
    if (!ok && !r.saturated()) {
      r.fail(law, "at " + cell(n, x));
    }
  };
  auto const& m = p.map;
  for (int n = 0; n <= top; ++n) {
    for (int x = 0; x < src.sizes[n]; ++x) {
      for (int i = 1; i <= n; ++i) {
        for (int s = 0; s < 2; ++s) {
          expect(m[n - 1][src.face(n, i, s, x)] == tgt.face(n, i, s, m[n][x]),
                 "commutes with " + to_string(d(i, s)), n, x);
        }
        expect(m[n][src.negative(n, i, x)] == tgt.negative(n, i, m[n][x]),
               "commutes with " + to_string(neg(i)), n, x);
      }
      if (n < top) {
        for (int i = 1; i <= n + 1; ++i) {
          expect(m[n + 1][src.degeneracy(n, i, x)] == tgt.degeneracy(n, i, m[n][x]),
                 "commutes with " + to_string(e(i)), n, x);
        }
        for (int i = 1; i <= n; ++i) {
          for (int s = 0; s < 2; ++s) {
            expect(m[n + 1][src.connection(n, i, s, x)] == tgt.connection(n, i, s, m[n][x]),
                   "commutes with " + to_string(g(i, s)), n, x);
          }
        }
      }
      if (n >= 2 && src.is_thin(n, x)) {
        expect(tgt.is_thin(n, m[n][x]), "preserves thin elements", n, x);
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (auto const& [key, z] : src.compositions[n][i - 1]) {
        int const x = static_cast<int>(key >> 32), y = static_cast<int>(key & 0xffffffffu);
        expect(m[n][z] == tgt.compose(n, i, m[n][x], m[n][y]),
               "commutes with o" + std::to_string(i), n, x);
      }
    }
  }
  return r;
}

std::string to_string(BoxLifting b) {
  switch (b) {
    case BoxLifting::covering: return "covering";
    case BoxLifting::kan_only: return "kan_only";
    case BoxLifting::neither: return "neither";
  }
  return "?";
}

BoxLifting has_unique_box_lifting(CubicalObject const& src, CubicalObject const& tgt,
                                  CubicalMap const& p) {
  auto const report = check_cubical_map(src, tgt, p);
  if (!report.pass()) {
    throw DomainError("not a map of cubical objects: " + report.to_string());
  }
  int const top   = std::min(src.top, tgt.top);
  bool      unique = true;
  for (int n = 1; n <= top; ++n) {
    std::vector<std::vector<int>> fibre(tgt.sizes[n]), below(tgt.sizes[n - 1]);
    for (int x = 0; x < src.sizes[n]; ++x) {
      fibre[p.map[n][x]].push_back(x);
    }
    for (int x = 0; x < src.sizes[n - 1]; ++x) {
      below[p.map[n - 1][x]].push_back(x);
    }
    for (int z = 0; z < tgt.sizes[n]; ++z) {
      for (int oi = 1; oi <= n; ++oi) {
        for (int os = 0; os < 2; ++os) {
          std::map<std::vector<int>, int> fillers;
          for (int x : fibre[z]) {
            ++fillers[box_key(box_of(src, n, x, oi, os))];
          }
          Box const target = box_of(tgt, n, z, oi, os);
          Box       b      = target;
          for (auto& f : b.faces) {
            f = {-1, -1};
          }
          std::vector<std::pair<int, int>> slots;
          for (int i = 1; i <= n; ++i) {
            for (int s = 0; s < 2; ++s) {
              if (i != oi || s != os) {
                slots.emplace_back(i, s);
              }
            }
          }
          // every source box over the target box needs its fillers counted
          bool missing = false;
          auto rec = [&](auto&& self, std::size_t slot) -> void {
            if (missing) {
              return;
            }
            if (slot == slots.size()) {
              auto it    = fillers.find(box_key(b));
              int  count = it == fillers.end() ? 0 : it->second;
              if (count == 0) {
                missing = true;
              } else if (count > 1) {
                unique = false;
              }
              return;
            }
            auto [i, s] = slots[slot];
            for (int y : below[target.faces[i - 1][s]]) {
              b.faces[i - 1][s] = y;
              if (b.compatible(src)) {
                self(self, slot + 1);
              }
              b.faces[i - 1][s] = -1;
            }
          };
          rec(rec, 0);
          if (missing) {
            return BoxLifting::neither;
          }
        }
      }
    }
  }
  return unique ? BoxLifting::covering : BoxLifting::kan_only;
}

}  // namespace xcrs
