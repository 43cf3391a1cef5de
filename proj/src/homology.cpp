#include "xcrs/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace xcrs {

// --- matrices --------------------------------------------------------------------

IntMatrix::IntMatrix(std::vector<std::vector<long>> const& rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  data_.reserve(std::size_t(rows_) * cols_);
  for (auto const& r : rows) {
    if (static_cast<int>(r.size()) != cols_) {
      throw StructuralError("matrix rows have different lengths");
    }
    for (long v : r) {
      data_.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Integer const& v) { return v == 0; });
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols_ != b.rows_) {
    throw DomainError("matrix product: dimension mismatch");
  }
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) {
        continue;
      }
      for (int j = 0; j < b.cols_; ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

std::string to_string(IntMatrix const& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      os << (j ? " " : "") << m.at(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

// --- Smith normal form -------------------------------------------------------------

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a != b) {
    for (int j = 0; j < m.cols(); ++j) {
      std::swap(m.at(a, j), m.at(b, j));
    }
  }
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a != b) {
    for (int i = 0; i < m.rows(); ++i) {
      std::swap(m.at(i, a), m.at(i, b));
    }
  }
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, int dst, int src, Integer const& k) {
  for (int j = 0; j < m.cols(); ++j) {
    m.at(dst, j) += k * m.at(src, j);
  }
}

void add_col(IntMatrix& m, int dst, int src, Integer const& k) {
  for (int i = 0; i < m.rows(); ++i) {
    m.at(i, dst) += k * m.at(i, src);
  }
}

// Smallest non-zero |entry| with i, j >= t, first in row-major order.
bool find_pivot(IntMatrix const& d, int t, int& pi, int& pj) {
  bool found = false;
  for (int i = t; i < d.rows(); ++i) {
    for (int j = t; j < d.cols(); ++j) {
      if (d.at(i, j) != 0 && (!found || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
        found = true;
        pi    = i;
        pj    = j;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d.at(i, i) != 0) {
      out.push_back(d.at(i, i));
    }
  }
  return out;
}

SmithForm smith_normal_form(IntMatrix const& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  auto&     d = s.d;
  for (int t = 0; t < std::min(d.rows(), d.cols()); ++t) {
    int pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) {
      break;
    }
    swap_rows(d, t, pi);
    swap_rows(s.u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(s.v, t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) != 0) {
          Integer q = d.at(i, t) / d.at(t, t);
          add_row(d, i, t, -q);
          add_row(s.u, i, t, -q);
          clean = clean && d.at(i, t) == 0;
        }
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) != 0) {
          Integer q = d.at(t, j) / d.at(t, t);
          add_col(d, j, t, -q);
          add_col(s.v, j, t, -q);
          clean = clean && d.at(t, j) == 0;
        }
      }
      if (!clean) {
        // a remainder is smaller than the pivot: move it into place
        int bi = t, bj = t;
        for (int i = t + 1; i < d.rows(); ++i) {
          if (d.at(i, t) != 0 && abs(d.at(i, t)) < abs(d.at(bi, bj))) {
            bi = i, bj = t;
          }
        }
        for (int j = t + 1; j < d.cols(); ++j) {
          if (d.at(t, j) != 0 && abs(d.at(t, j)) < abs(d.at(bi, bj))) {
            bi = t, bj = j;
          }
        }
        swap_rows(d, t, bi);
        swap_rows(s.u, t, bi);
        swap_cols(d, t, bj);
        swap_cols(s.v, t, bj);
        continue;
      }
      // divisibility: fold an offending row into the pivot row
      int bad = -1;
      for (int i = t + 1; i < d.rows() && bad < 0; ++i) {
        for (int j = t + 1; j < d.cols(); ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) {
        break;
      }
      add_row(d, t, bad, 1);
      add_row(s.u, t, bad, 1);
    }
    if (d.at(t, t) < 0) {
      for (int j = 0; j < d.cols(); ++j) {
        d.at(t, j) = -d.at(t, j);
      }
      for (int j = 0; j < s.u.cols(); ++j) {
        s.u.at(t, j) = -s.u.at(t, j);
      }
    }
  }
  return s;
}

// --- homology ------------------------------------------------------------------

std::string to_string(AbelianGroup const& g) {
  if (g.trivial()) {
    return "0";
  }
  std::string out;
  auto        add = [&](std::string const& part) { out += (out.empty() ? "" : " + ") + part; };
  if (g.rank == 1) {
    add("Z");
  } else if (g.rank > 1) {
    add("Z^" + std::to_string(g.rank));
  }
  for (auto const& t : g.torsion) {
    add("Z/" + t.get_str());
  }
  return out;
}

void check_chain_complex(IntChainComplex const& c) {
  if (c.boundary.size() + 1 != c.ranks.size()) {
    throw StructuralError("chain complex: need one boundary matrix per positive degree");
  }
  for (int n = 1; n <= c.top(); ++n) {
    auto const& d = c.boundary[n - 1];
    if (d.rows() != c.ranks[n - 1] || d.cols() != c.ranks[n]) {
      throw StructuralError("chain complex: d_" + std::to_string(n) + " has the wrong shape");
    }
  }
  for (int n = 1; n < c.top(); ++n) {
    auto const prod = c.boundary[n - 1] * c.boundary[n];
    for (int i = 0; i < prod.rows(); ++i) {
      for (int j = 0; j < prod.cols(); ++j) {
        if (prod.at(i, j) != 0) {
          throw DomainError("chain complex: (d_" + std::to_string(n) + " d_"
                            + std::to_string(n + 1) + ")[" + std::to_string(i) + "]["
                            + std::to_string(j) + "] = " + prod.at(i, j).get_str());
        }
      }
    }
  }
}

AbelianGroup chain_homology(IntChainComplex const& c, int n) {
  check_chain_complex(c);
  if (n < 0 || n > c.top()) {
    return {};
  }
  auto rank_of = [](IntMatrix const& m) {
    return static_cast<int>(smith_normal_form(m).diagonal().size());
  };
  int const    out_rank = n >= 1 ? rank_of(c.boundary[n - 1]) : 0;
  AbelianGroup h;
  int          in_rank = 0;
  if (n + 1 <= c.top()) {
    for (auto const& e : smith_normal_form(c.boundary[n]).diagonal()) {
      ++in_rank;
      if (e != 1) {
        h.torsion.push_back(e);
      }
    }
  }
  h.rank = c.ranks[n] - out_rank - in_rank;
  return h;
}

IntChainComplex cover_chain_complex(CrossedComplex const& c, std::size_t bound) {
  if (c.regime != Regime::free) {
    throw DomainError("cover chains need a free complex");
  }
  if (c.dim > 2) {
    // one vertex suffices per component; covers are connected
    int const checked = c.is_connected() ? 1 : c.num_objects();
    for (int x = 0; x < checked; ++x) {
      if (pi1(c, x, bound).order() != 1) {
        throw DomainError("cover chains: pi_1 is not trivial, so abelianising dimension "
                          ">= 3 would lose the group-ring structure");
      }
    }
  }
  auto const      counts = c.cell_counts();
  IntChainComplex out;
  out.ranks = counts;
  for (int n = 1; n <= c.dim; ++n) {
    IntMatrix d(counts[n - 1], counts[n]);
    if (n == 1) {
      for (int e = 0; e < counts[1]; ++e) {
        d.at(c.graph.edges[e].src, e) -= 1;
        d.at(c.graph.edges[e].dst, e) += 1;
      }
    } else {
      auto const& l = c.basis(n);
      for (int b = 0; b < l.size(); ++b) {
        if (n == 2) {
          for (auto letter : std::get<Word>(l.boundary[b]).letters) {
            d.at(letter.edge, b) += letter.inverse ? -1 : 1;
          }
        } else if (n == 3) {
          for (auto const& t : std::get<Elem2>(l.boundary[b]).terms) {
            d.at(t.basis, b) += t.inverse ? -1 : 1;
          }
        } else {
          for (auto const& t : std::get<ChainElem>(l.boundary[b]).terms) {
            d.at(t.basis, b) += t.coef;
          }
        }
      }
    }
    out.boundary.push_back(std::move(d));
  }
  return out;
}

namespace {

AbelianGroup from_finite(FiniteGroup const& g) {
  AbelianGroup out;
  for (long f : g.invariant_factors()) {
    out.torsion.emplace_back(f);
  }
  return out;
}

AbelianGroup concrete_homology(CrossedComplex const& c, int x, int n) {
  auto const& l  = c.layer(n);
  auto const& gx = l.groups.at(x);
  // kernel of delta_n at x
  std::vector<int> kernel;
  for (int e = 0; e < gx.size(); ++e) {
    bool trivial = n == 2 ? l.boundary[x][e] == c.groupoid.identity(x)
                          : l.boundary[x][e] == c.layer(n - 1).groups[x].identity();
    if (trivial) {
      kernel.push_back(e);
    }
  }
  std::set<int> image{gx.identity()};
  if (n + 1 <= c.dim) {
    auto const& up = c.layer(n + 1);
    for (int e : up.boundary[x]) {
      image.insert(e);
    }
  }
  FiniteGroup      whole(gx.mul);
  std::vector<int> embed;
  auto const       k = whole.restrict_to(kernel, &embed);
  if (!k.is_abelian()) {
    throw DomainError("homology: kernel of the boundary is not abelian");
  }
  std::vector<int> sub;
  for (int i = 0; i < k.order(); ++i) {
    if (image.count(embed[i])) {
      sub.push_back(i);
    }
  }
  return from_finite(k.quotient(k.generated_subgroup(sub)));
}

}  // namespace

AbelianGroup homology_at_vertex(CrossedComplex const& c, int x, int n) {
  if (x < 0 || x >= c.num_objects()) {
    throw DomainError("homology: unknown vertex");
  }
  if (c.regime == Regime::concrete) {
    if (n < 2 || n > c.dim) {
      throw DomainError("homology: n must lie in 2.." + std::to_string(c.dim));
    }
    return concrete_homology(c, x, n);
  }
  if (n < 2 || n > c.dim - 1) {
    throw DomainError("homology: n must lie in 2.." + std::to_string(c.dim - 1)
                      + " (needs delta_{n+1})");
  }
  if (pi1(c, x).order() != 1) {
    throw DomainError("homology: free complexes need a trivial pi_1; use the universal cover");
  }
  auto const chains = cover_chain_complex(c);
  return chain_homology(chains, n);
}

std::string AsphericityReport::to_string() const {
  std::ostringstream os;
  if (!finite_cover) {
    os << "window requires finite cover\n";
    return os.str();
  }
  os << "pi1 = " << describe(pi1) << "\n";
  os << "universal cover objects = " << cover_objects << "\n";
  for (std::size_t i = 0; i < homology.size(); ++i) {
    os << "H" << i + 1 << " = " << xcrs::to_string(homology[i]) << "\n";
  }
  os << (aspherical ? "aspherical in window" : "not aspherical in window") << "\n";
  return os.str();
}

AsphericityReport asphericity_check(CrossedComplex const& f, int n_max, std::size_t bound) {
  if (f.regime != Regime::free) {
    throw DomainError("asphericity: needs a free complex");
  }
  if (!f.is_connected()) {
    throw DomainError("asphericity: complex is not connected");
  }
  if (n_max > f.dim) {
    throw DomainError("asphericity: window exceeds the truncation");
  }
  AsphericityReport r;
  try {
    r.pi1 = pi1(f, 0, bound);
  } catch (BoundExceeded const&) {
    return r;
  }
  r.finite_cover      = true;
  auto const cover    = universal_cover(f, 0, Pi1Subgroup{}, bound);
  r.cover_objects     = cover.complex.num_objects();
  auto const chains   = cover_chain_complex(cover.complex, bound);
  r.aspherical        = true;
  for (int n = 1; n <= n_max - 1; ++n) {
    r.homology.push_back(chain_homology(chains, n));
    r.aspherical = r.aspherical && r.homology.back().trivial();
  }
  return r;
}

}  // namespace xcrs
