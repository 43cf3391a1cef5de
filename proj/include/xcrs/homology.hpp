#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "xcrs/cover.hpp"
#include "xcrs/crossed_complex.hpp"

namespace xcrs {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  IntMatrix(std::vector<std::vector<long>> const& rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer&       at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  Integer const& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  bool is_zero() const;

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend bool operator==(IntMatrix const& a, IntMatrix const& b) = default;

 private:
  int                  rows_ = 0;
  int                  cols_ = 0;
  std::vector<Integer> data_;
};

// Plain row-per-line integer format.
std::string to_string(IntMatrix const& m);

// U * M * V = D with D diagonal, d1 | d2 | ..., entries non-negative, and U, V
// unimodular. Pivot: smallest non-zero absolute value, ties row-major.
struct SmithForm {
  IntMatrix d, u, v;
  std::vector<Integer> diagonal() const;  // non-zero diagonal entries
};

SmithForm smith_normal_form(IntMatrix const& m);

// Finitely generated abelian group Z^rank + sum Z/torsion_i, torsion_i > 1
// and each dividing the next.
struct AbelianGroup {
  int                  rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;
};

std::string to_string(AbelianGroup const& g);

// ranks[n] for n = 0..N; boundary[n - 1] = d_n : Z^ranks[n] -> Z^ranks[n-1],
// stored as a ranks[n-1] x ranks[n] matrix.
struct IntChainComplex {
  std::vector<int>       ranks;
  std::vector<IntMatrix> boundary;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
};

// H_n = ker d_n / im d_{n+1}; throws DomainError naming an entry of a non-zero
// d_n d_{n+1}.
AbelianGroup chain_homology(IntChainComplex const& c, int n);
void check_chain_complex(IntChainComplex const& c);

// Cellular chains of a free complex: d_1 = target - source, higher d_n count
// basis occurrences with their exponents and drop transports. Equal to the
// complex's own chains when pi_1 is trivial; accepted otherwise only up to
// dimension 2, where it is the chain complex of the underlying 2-complex.
IntChainComplex cover_chain_complex(CrossedComplex const& c,
                                    std::size_t bound = default_coset_bound);

// H_n(C, x) for 2 <= n <= N. Concrete: ker delta_n / im delta_{n+1} in C_n(x),
// with im delta_{N+1} trivial. Free: requires trivial pi_1 and n <= N - 1.
AbelianGroup homology_at_vertex(CrossedComplex const& c, int x, int n);

struct AsphericityReport {
  bool                      finite_cover = false;
  FiniteGroup               pi1;
  int                       cover_objects = 0;
  std::vector<AbelianGroup> homology;  // H_1 .. H_{N-1} of the universal cover
  bool                      aspherical = false;

  std::string to_string() const;
};

// Universal cover (trivial subgroup), its chains and H_n for 1 <= n <= N - 1.
AsphericityReport asphericity_check(CrossedComplex const& f, int n_max,
                                    std::size_t bound = default_coset_bound);

}  // namespace xcrs
