#include "xcrs/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace xcrs {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(std::to_string(i));
  }
  return out;
}

std::vector<int> prime_factors(long n) {
  std::vector<int> out;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    out.push_back(static_cast<int>(n));
  }
  return out;
}

}  // namespace

Report check_group_table(std::vector<std::vector<int>> const& table) {
  Report      r;
  auto const  n = static_cast<int>(table.size());
  if (n == 0) {
    r.malformed("empty group table");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      r.malformed("row " + std::to_string(a) + " has wrong length");
      return r;
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        r.malformed("entry (" + std::to_string(a) + "," + std::to_string(b)
                    + ") out of range");
        return r;
      }
    }
  }
  for (int a = 0; a < n && !r.saturated(); ++a) {
    for (int b = 0; b < n && !r.saturated(); ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          r.fail("associativity", "(" + std::to_string(a) + ","
                                      + std::to_string(b) + ","
                                      + std::to_string(c) + ")");
          break;
        }
      }
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) {
      ok = table[a][b] == b && table[b][a] == b;
    }
    if (ok) {
      e = a;
    }
  }
  if (e < 0) {
    r.fail("identity", "no two-sided identity");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) {
      found = table[a][b] == e && table[b][a] == e;
    }
    if (!found) {
      r.fail("inverse", "element " + std::to_string(a) + " has no inverse");
    }
  }
  return r;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string>      names)
    : table_(std::move(table)), names_(std::move(names)) {
  auto r = check_group_table(table_);
  if (!r.pass()) {
    throw StructuralError("not a group table: " + r.to_string());
  }
  int const n = order();
  if (names_.empty()) {
    names_ = default_names(n);
  }
  if (static_cast<int>(names_.size()) != n) {
    throw StructuralError("group element name count mismatch");
  }
  for (int a = 0; a < n; ++a) {
    if (std::all_of(table_[a].begin(), table_[a].end(),
                    [&, b = 0](int v) mutable { return v == b++; })) {
      identity_ = a;
      break;
    }
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) {
        inverse_[a] = b;
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[a][b] = (a + b) % n;
    }
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // Elements r^k s^f encoded as k + n f.
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      int ka = a % n, fa = a / n, kb = b % n, fb = b / n;
      // s r^k = r^{-k} s
      int k = fa ? (ka - kb + n) % n : (ka + kb) % n;
      t[a][b] = k + n * (fa ^ fb);
    }
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3>              p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int const                     n = 6;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) {
        c[i] = perms[b][perms[a][i]];  // a first, then b
      }
      t[a][b] = static_cast<int>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::quaternion() {
  // Elements (+-1, +-i, +-j, +-k) as sign*4 + unit, unit in {1,i,j,k}.
  static int const unit_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static int const sign_mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ua = a % 4, ub = b % 4;
      int s  = (a / 4) ^ (b / 4) ^ sign_mul[ua][ub];
      t[a][b] = s * 4 + unit_mul[ua][ub];
    }
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(FiniteGroup const& a,
                                        FiniteGroup const& b) {
  int const                     na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  std::vector<std::string>      names;
  for (int x = 0; x < na * nb; ++x) {
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y) {
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

int FiniteGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = identity_;
  for (long i = 0; i < k; ++i) {
    r = mul(r, a);
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) {
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(
    std::vector<int> const& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int>  out{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : gens) {
      int x = mul(out[i], g);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  // Every subgroup of a group this small is reached by adjoining one element
  // at a time to a smaller subgroup.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier{{identity_}};
  seen.insert({identity_});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto const& h : frontier) {
      for (int g = 0; g < order(); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) {
          continue;
        }
        auto gens = h;
        gens.push_back(g);
        auto k = generated_subgroup(gens);
        if (seen.insert(k).second) {
          next.push_back(std::move(k));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool FiniteGroup::is_subgroup(std::vector<int> const& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(identity_)) {
    return false;
  }
  for (int a : s) {
    if (a < 0 || a >= order() || !s.count(inv(a))) {
      return false;
    }
    for (int b : s) {
      if (!s.count(mul(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool FiniteGroup::is_normal(std::vector<int> const& subgroup) const {
  std::set<int> s(subgroup.begin(), subgroup.end());
  for (int g = 0; g < order(); ++g) {
    for (int h : s) {
      if (!s.count(mul(mul(inv(g), h), g))) {
        return false;
      }
    }
  }
  return true;
}

FiniteGroup FiniteGroup::restrict_to(std::vector<int> const& subgroup,
                                     std::vector<int>* embedding) const {
  std::vector<int> elems = subgroup;
  std::sort(elems.begin(), elems.end());
  // identity first
  std::stable_partition(elems.begin(), elems.end(),
                        [&](int x) { return x == identity_; });
  std::map<int, int>            index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = static_cast<int>(i);
  }
  int const                     n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string>      names;
  for (int a = 0; a < n; ++a) {
    names.push_back(name(elems[a]));
    for (int b = 0; b < n; ++b) {
      auto it = index.find(mul(elems[a], elems[b]));
      if (it == index.end()) {
        throw DomainError("restrict_to: not closed under multiplication");
      }
      t[a][b] = it->second;
    }
  }
  if (embedding) {
    *embedding = elems;
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::quotient(std::vector<int> const& normal,
                                  std::vector<int>*       projection) const {
  if (!is_subgroup(normal) || !is_normal(normal)) {
    throw DomainError("quotient: not a normal subgroup");
  }
  std::vector<int> cls(order(), -1);
  std::vector<int> reps;
  for (int g = 0; g < order(); ++g) {
    if (cls[g] >= 0) {
      continue;
    }
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int k : normal) {
      cls[mul(k, g)] = c;
    }
  }
  // identity class is 0 because the identity element's coset is found first
  // only if identity_ == 0; reorder so that the identity's class is first.
  int const ic = cls[identity_];
  if (ic != 0) {
    std::swap(reps[0], reps[ic]);
    for (int& c : cls) {
      c = c == 0 ? ic : (c == ic ? 0 : c);
    }
  }
  int const                     n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[a][b] = cls[mul(reps[a], reps[b])];
    }
  }
  if (projection) {
    *projection = cls;
  }
  return FiniteGroup(std::move(t));
}

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> gens;
  auto             span = generated_subgroup(gens);
  while (static_cast<int>(span.size()) < order()) {
    // pick the element enlarging the span the most; ties by smallest id
    int best = -1;
    std::size_t best_size = 0;
    for (int g = 0; g < order(); ++g) {
      if (std::binary_search(span.begin(), span.end(), g)) {
        continue;
      }
      auto trial = gens;
      trial.push_back(g);
      auto s = generated_subgroup(trial).size();
      if (s > best_size) {
        best_size = s;
        best      = g;
      }
    }
    gens.push_back(best);
    span = generated_subgroup(gens);
  }
  return gens;
}

std::vector<long> FiniteGroup::invariant_factors() const {
  if (!is_abelian()) {
    throw DomainError("invariant_factors: group is not abelian");
  }
  long const n = order();
  // per prime: multiplicities of cyclic factors of each p-power order
  std::vector<std::vector<long>> prime_power_orders;  // descending per prime
  for (int p : prime_factors(n)) {
    std::vector<int> r{0};  // r[k] = log_p |G[p^k]|
    long             pk = 1;
    for (int k = 1;; ++k) {
      pk *= p;
      long count = 0;
      for (int a = 0; a < order(); ++a) {
        count += pow(a, pk) == identity_;
      }
      int lg = 0;
      for (long c = count; c > 1; c /= p) {
        ++lg;
      }
      r.push_back(lg);
      if (r[k] == r[k - 1]) {
        r.pop_back();
        break;
      }
    }
    // m[k] = number of factors of order >= p^k
    std::vector<long> orders;
    int const         top = static_cast<int>(r.size()) - 1;
    for (int k = top; k >= 1; --k) {
      long m_k   = r[k] - r[k - 1];
      long m_kp1 = k + 1 <= top ? r[k + 1] - r[k] : 0;
      long q     = 1;
      for (int i = 0; i < k; ++i) {
        q *= p;
      }
      for (long j = 0; j < m_k - m_kp1; ++j) {
        orders.push_back(q);
      }
    }
    prime_power_orders.push_back(orders);  // already descending
  }
  std::size_t len = 0;
  for (auto const& v : prime_power_orders) {
    len = std::max(len, v.size());
  }
  std::vector<long> factors(len, 1);  // factors[0] largest
  for (auto const& v : prime_power_orders) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      factors[i] *= v[i];
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::optional<std::vector<int>> find_isomorphism(FiniteGroup const& g,
                                                 FiniteGroup const& h) {
  if (g.order() != h.order()) {
    return std::nullopt;
  }
  auto const gens = g.generators();
  std::vector<int> gorders;
  for (int x : gens) {
    gorders.push_back(g.element_order(x));
  }
  std::vector<int> horder(h.order());
  for (int y = 0; y < h.order(); ++y) {
    horder[y] = h.element_order(y);
  }
  std::vector<int> images(gens.size(), -1);

  auto extend = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> map(g.order(), -1);
    map[g.identity()] = h.identity();
    std::vector<int> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int gx = g.mul(x, gens[k]);
        int hx = h.mul(map[x], images[k]);
        if (map[gx] < 0) {
          map[gx] = hx;
          queue.push_back(gx);
        } else if (map[gx] != hx) {
          return std::nullopt;
        }
      }
    }
    std::vector<char> hit(h.order(), 0);
    for (int v : map) {
      if (v < 0 || hit[v]) {
        return std::nullopt;
      }
      hit[v] = 1;
    }
    // homomorphism on all pairs (the BFS only checks generator steps)
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) {
        if (map[g.mul(a, b)] != h.mul(map[a], map[b])) {
          return std::nullopt;
        }
      }
    }
    return map;
  };

  std::optional<std::vector<int>> found;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      found = extend();
      return found.has_value();
    }
    for (int y = 0; y < h.order(); ++y) {
      if (horder[y] != gorders[k]) {
        continue;
      }
      images[k] = y;
      if (self(self, k + 1)) {
        return true;
      }
    }
    return false;
  };
  search(search, 0);
  return found;
}

bool is_isomorphic(FiniteGroup const& g, FiniteGroup const& h) {
  return find_isomorphism(g, h).has_value();
}

std::string describe(FiniteGroup const& g) {
  if (g.order() == 1) {
    return "1";
  }
  if (!g.is_abelian()) {
    return "order " + std::to_string(g.order()) + " nonabelian";
  }
  std::ostringstream out;
  auto               f = g.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << (i ? " x " : "") << 'C' << f[i];
  }
  return out.str();
}

}  // namespace xcrs
