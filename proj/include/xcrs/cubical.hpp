#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "xcrs/crossed_complex.hpp"
#include "xcrs/crossed_morphism.hpp"
#include "xcrs/report.hpp"

namespace xcrs {

inline constexpr int max_cubical_dim = 3;

// Cubical set with connections, compositions and thin elements, truncated at
// `top` <= 3. Indices i are 1-based as in the usual notation; sign 0 is
// "-" and 1 is "+". Connection sign 0 is the max-type connection.
struct CubicalObject {
  int                top = 0;
  std::array<int, 4> sizes{};

  // face[n][i-1][sign][x] : K_n -> K_{n-1}, 1 <= n <= top
  std::array<std::vector<std::array<std::vector<int>, 2>>, 4> faces;
  // degeneracy[n][i-1][x] : K_n -> K_{n+1}, 0 <= n < top, 1 <= i <= n+1
  std::array<std::vector<std::vector<int>>, 4> degeneracies;
  // connection[n][i-1][sign][x] : K_n -> K_{n+1}, 1 <= n < top, 1 <= i <= n
  std::array<std::vector<std::array<std::vector<int>, 2>>, 4> connections;
  // negative[n][i-1][x] : K_n -> K_n
  std::array<std::vector<std::vector<int>>, 4> negatives;
  // compositions[n][i-1] : (x, y) -> x o_i y on pairs with d_i^+ x = d_i^- y
  std::array<std::vector<std::unordered_map<std::uint64_t, int>>, 4> compositions;
  // thin[n][x] for n = 2, 3
  std::array<std::vector<bool>, 4> thin;

  int face(int n, int i, int sign, int x) const { return faces[n][i - 1][sign][x]; }
  int degeneracy(int n, int i, int x) const { return degeneracies[n][i - 1][x]; }
  int connection(int n, int i, int sign, int x) const { return connections[n][i - 1][sign][x]; }
  int negative(int n, int i, int x) const { return negatives[n][i - 1][x]; }
  // -1 when undefined
  int compose(int n, int i, int x, int y) const;
  bool is_thin(int n, int x) const { return n >= 2 && thin[n][x]; }

  static std::uint64_t pair_key(int x, int y) {
    return (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y);
  }
};

// One unary operator of a law: face d_i^s, degeneracy e_i, connection G_i^s,
// negative -_i.
struct CubicalOp {
  enum class Kind { face, degeneracy, connection, negative };
  Kind kind;
  int  i    = 1;
  int  sign = 0;
};

// lhs(x) = rhs(x) for x in K_dim, operator words applied right to left.
struct UnaryLaw {
  std::string            name;
  int                    dim = 0;
  std::vector<CubicalOp> lhs, rhs;
};

std::string to_string(CubicalOp const& op);
std::string to_string(UnaryLaw const& law);

// Every instance of the unary laws (cubical identities, connection laws,
// negatives, transport law) whose intermediate dimensions lie in 0..top.
std::vector<UnaryLaw> unary_laws(int top);

// Structural table checks, unary laws, composition laws (faces of
// composites, identities, inverses, associativity, interchange,
// degeneracies and connections over composites, G+ o G- laws) and the thin
// axioms D1 to D3.
Report check_cubical_laws(CubicalObject const& k);

// A box: every face of an n-cube except (omit_i, omit_sign).
struct Box {
  int                                   n = 2;
  int                                   omit_i = 1;
  int                                   omit_sign = 0;
  std::vector<std::array<int, 2>>       faces;  // faces[i-1][sign], -1 at the omitted slot

  bool compatible(CubicalObject const& k) const;
};

Box box_of(CubicalObject const& k, int n, int x, int omit_i, int omit_sign);

// The unique thin filler, by exhaustive search. Throws DomainError when
// there is none or more than one.
int thin_filler(CubicalObject const& k, Box const& b);

// Calls `visit` on every compatible box of K_n (1 <= n <= top).
template <typename Visit>
void for_each_box(CubicalObject const& k, int n, Visit&& visit);

// Report on D2: every box has exactly one thin filler.
Report check_unique_thin_fillers(CubicalObject const& k);

// lambda(C) for a concrete complex: K_n are the morphisms from the free
// n-cube into C, stored as one value per cube cell. Dimension 3 is built
// when |K_3| stays within `cube_cap`; otherwise top = 2.
inline constexpr int lambda_cube_cap = 4096;

struct LambdaObject {
  CubicalObject                         cubes;
  std::array<std::vector<std::vector<int>>, 4> cells;  // cells[n][x]: values per cube cell
};

LambdaObject lambda_truncated(CrossedComplex const& c, int cube_cap = lambda_cube_cap);

// Map of cubical objects, map[n][x].
struct CubicalMap {
  std::array<std::vector<int>, 4> map;
};

CubicalMap lambda_map(CrossedComplex const& src, LambdaObject const& ls,
                      CrossedComplex const& tgt, LambdaObject const& lt,
                      CrossedMorphism const& f);

// Commutation with faces, degeneracies, connections, negatives and
// compositions, plus preservation of thin elements.
Report check_cubical_map(CubicalObject const& src, CubicalObject const& tgt,
                         CubicalMap const& p);

enum class BoxLifting { covering, kan_only, neither };
std::string to_string(BoxLifting b);

// For every box of the source over a box of the target (dimensions 1 to the
// common top) and every target filler, counts the source fillers over it:
// exactly one always gives covering, at least one always gives kan_only.
// Throws DomainError when p does not commute with the operators.
BoxLifting has_unique_box_lifting(CubicalObject const& src, CubicalObject const& tgt,
                                  CubicalMap const& p);

// ---------------------------------------------------------------------------

template <typename Visit>
void for_each_box(CubicalObject const& k, int n, Visit&& visit) {
  for (int oi = 1; oi <= n; ++oi) {
    for (int os = 0; os < 2; ++os) {
      Box b;
      b.n         = n;
      b.omit_i    = oi;
      b.omit_sign = os;
      b.faces.assign(n, {-1, -1});
      // slots in order (1,-), (1,+), (2,-), ...
      std::vector<std::pair<int, int>> slots;
      for (int i = 1; i <= n; ++i) {
        for (int s = 0; s < 2; ++s) {
          if (i != oi || s != os) {
            slots.emplace_back(i, s);
          }
        }
      }
      auto fits = [&](int i, int s, int y) {
        for (int j = 1; j <= n; ++j) {
          for (int t = 0; t < 2; ++t) {
            int z = b.faces[j - 1][t];
            if (z < 0 || j == i) {
              continue;
            }
            // d_j^t d_i^s = d_{i-1}^s d_j^t for j < i
            if (j < i ? k.face(n - 1, j, t, y) != k.face(n - 1, i - 1, s, z)
                      : k.face(n - 1, j - 1, t, y) != k.face(n - 1, i, s, z)) {
              return false;
            }
          }
        }
        return true;
      };
      auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == slots.size()) {
          visit(static_cast<Box const&>(b));
          return;
        }
        auto [i, s] = slots[slot];
        for (int y = 0; y < k.sizes[n - 1]; ++y) {
          if (n == 1 || fits(i, s, y)) {
            b.faces[i - 1][s] = y;
            self(self, slot + 1);
            b.faces[i - 1][s] = -1;
          }
        }
      };
      rec(rec, 0);
    }
  }
}

}  // namespace xcrs
