#include "xcrs/coset_enum.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "xcrs/report.hpp"

namespace xcrs {

namespace {

// column of a letter; inverse columns differ in the low bit
int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
int inverse_column(int col) { return col ^ 1; }

class Enumerator {
 public:
  Enumerator(int generators, std::size_t bound)
      : cols_(2 * generators), bound_(bound) {
    new_coset();
  }

  void run(Presentation const& p, std::vector<std::vector<int>> const& subgroup) {
    for (auto const& w : subgroup) {
      scan_and_fill(0, to_cols(w));
    }
    std::vector<std::vector<int>> rels;
    for (auto const& r : p.relators) {
      rels.push_back(to_cols(r));
    }
    for (std::size_t a = 0; a < table_.size(); ++a) {
      for (auto const& r : rels) {
        if (!live(a)) {
          break;
        }
        scan_and_fill(static_cast<int>(a), r);
      }
      for (int x = 0; x < cols_ && live(a); ++x) {
        if (table_[a][x] < 0) {
          define(static_cast<int>(a), x);
        }
      }
    }
  }

  CosetTable standardize(int generators) {
    // breadth-first renumbering of the live cosets from coset 0
    std::vector<int> renum(table_.size(), -1);
    std::vector<int> order{0};
    std::vector<std::vector<int>> reps{{}};
    renum[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      int c = order[i];
      for (int x = 0; x < cols_; ++x) {
        int d = table_[c][x] < 0 ? -1 : rep(table_[c][x]);
        if (d >= 0 && renum[d] < 0) {
          renum[d] = static_cast<int>(order.size());
          order.push_back(d);
          auto w = reps[i];
          w.push_back(x % 2 == 0 ? x / 2 + 1 : -(x / 2 + 1));
          reps.push_back(std::move(w));
        }
      }
    }
    CosetTable t;
    t.generators = generators;
    t.representatives = std::move(reps);
    for (int c : order) {
      std::vector<int> row(cols_);
      for (int x = 0; x < cols_; ++x) {
        row[x] = renum[rep(table_[c][x])];
      }
      t.table.push_back(std::move(row));
    }
    return t;
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  std::vector<int> to_cols(std::vector<int> const& w) const {
    std::vector<int> out;
    for (int l : w) {
      if (l == 0 || std::abs(l) > cols_ / 2) {
        throw DomainError("coset enumeration: letter out of range");
      }
      out.push_back(column(l));
    }
    return out;
  }

  int new_coset() {
    if (table_.size() >= bound_) {
      throw BoundExceeded("not finite within bound (" + std::to_string(bound_)
                          + " cosets)");
    }
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    int d           = new_coset();
    table_[c][x]    = d;
    table_[d][inverse_column(x)] = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) {
      r = parent_[r];
    }
    while (parent_[c] != r) {
      int next   = parent_[c];
      parent_[c] = r;
      c          = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    int pa = rep(a), pb = rep(b);
    if (pa == pb) {
      return;
    }
    int lo = std::min(pa, pb), hi = std::max(pa, pb);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int g = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int d = table_[g][x];
        if (d < 0) {
          continue;
        }
        int xi = inverse_column(x);
        if (table_[d][xi] == g) {
          table_[d][xi] = -1;
        }
        int m = rep(g), n = rep(d);
        if (table_[m][x] >= 0) {
          merge(n, table_[m][x], queue);
        } else if (table_[n][xi] >= 0) {
          merge(m, table_[n][xi], queue);
        } else {
          table_[m][x]  = n;
          table_[n][xi] = m;
        }
      }
    }
  }

  void scan_and_fill(int a, std::vector<int> const& w) {
    int const n = static_cast<int>(w.size());
    int       f = a, b = a;
    int       i = 0, j = n - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) {
        f = table_[f][w[i]];
        ++i;
      }
      if (i > j) {
        if (f != a) {
          coincidence(f, a);
        }
        return;
      }
      while (j >= i && table_[b][inverse_column(w[j])] >= 0) {
        b = table_[b][inverse_column(w[j])];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]]                  = b;
        table_[b][inverse_column(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int                           cols_;
  std::size_t                   bound_;
  std::vector<std::vector<int>> table_;
  std::vector<int>              parent_;
};

}  // namespace

int CosetTable::act(int coset, int letter) const {
  return table.at(coset).at(column(letter));
}

int CosetTable::trace(int coset, std::vector<int> const& word) const {
  for (int l : word) {
    coset = act(coset, l);
  }
  return coset;
}

CosetTable enumerate_cosets(Presentation const&                  p,
                            std::vector<std::vector<int>> const& subgroup,
                            std::size_t                          max_cosets) {
  Enumerator e(p.generators, max_cosets);
  e.run(p, subgroup);
  return e.standardize(p.generators);
}

FiniteGroup group_from_regular_table(CosetTable const& t) {
  int const                     n = t.index();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[i][j] = t.trace(i, t.representatives[j]);
    }
  }
  return FiniteGroup(std::move(table));
}

}  // namespace xcrs
