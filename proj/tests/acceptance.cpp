// Acceptance gate: one pass/fail line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "xcrs/catalogue.hpp"
#include "xcrs/cli.hpp"
#include "xcrs/cover.hpp"
#include "xcrs/cubical.hpp"
#include "xcrs/homology.hpp"
#include "xcrs/tensor.hpp"
#include "xcrs/xcrs_format.hpp"

using namespace xcrs;

namespace {

// Wall-clock budgets in seconds; a criterion over budget fails.
constexpr double budget_cube_law     = 1.0;
constexpr double budget_tensor_cover = 30.0;
constexpr double budget_aspherical   = 60.0;
constexpr double budget_homology     = 120.0;

// Largest lambda square set on which box lifting is compared exhaustively.
constexpr int max_lambda_squares = 10000;

constexpr int         homology_samples = 10000;
constexpr unsigned    homology_seed    = 20240611;
constexpr int         min_mutations    = 20;

struct Outcome {
  bool        pass = true;
  std::string detail;

  void require(bool ok, std::string const& what) {
    if (!ok && pass) {
      pass   = false;
      detail = what;
    }
  }
};

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::string morphism_key(CrossedComplex const& src, CrossedComplex const& tgt,
                         CrossedMorphism const& f) {
  std::ostringstream s;
  for (int o : f.object_map) {
    s << o << ' ';
  }
  for (int n = 1; n <= src.dim; ++n) {
    s << '|';
    for (auto const& img : f.cells[n - 1]) {
      s << to_string(tgt, n, img) << ' ';
    }
  }
  return s.str();
}

// Covers of every concrete connected catalogue complex, one per subgroup.
struct CoverCase {
  std::string    name;
  CrossedComplex base;
  Cover          cover;
};

std::vector<CoverCase> concrete_covers() {
  std::vector<CoverCase> out;
  for (auto const& key : concrete_catalogue_keys()) {
    auto const c = catalogue(key);
    if (!c.is_connected()) {
      continue;
    }
    auto const subs = pi1_subgroups(c, 0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      out.push_back({key + " subgroup " + std::to_string(i), c, universal_cover(c, 0, subs[i])});
    }
  }
  return out;
}

Outcome cube_law() {
  Outcome    o;
  auto const square = tensor_free(cube_complex(1), cube_complex(1), 2);
  o.require(square.complex.cell_counts() == std::vector<int>{4, 4, 1}, "I (x) I counts");
  auto text = serialize(square.complex, "main");
  std::erase(text, '|');
  o.require(text == serialize(cube_complex(2), "main"), "I (x) I boundary word differs from cube:2");
  // catalogue cubes stop at dimension 3
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3 && m + n <= max_tensor_dim; ++n) {
      auto const counts = tensor_free(cube_complex(m), cube_complex(n), m + n).complex.cell_counts();
      for (int k = 0; k <= m + n; ++k) {
        o.require(counts[k] == binomial(m + n, k) * (1L << (m + n - k)),
                  "counts of cube:" + std::to_string(m) + " (x) cube:" + std::to_string(n));
      }
    }
  }
  o.detail = o.pass ? "I (x) I = cube:2, counts for m + n <= " + std::to_string(max_tensor_dim) : o.detail;
  return o;
}

Outcome tensor_of_covers() {
  Outcome    o;
  int        instances = 0;
  auto const keys      = {"cyc:2:2", "cyc:3:2", "cyc:4:2"};
  for (auto const* ka : keys) {
    for (auto const* kb : keys) {
      auto const a = catalogue(ka);
      auto const b = catalogue(kb);
      auto       chosen = [](CrossedComplex const& c) {
        std::vector<Pi1Subgroup> out;
        int const                order = pi1(c, 0).order();
        for (auto const& m : pi1_subgroups(c, 0)) {
          int const index = universal_cover(c, 0, m).index();
          if (index == order || index == 2) {
            out.push_back(m);
          }
        }
        return out;
      };
      for (auto const& m : chosen(a)) {
        for (auto const& k : chosen(b)) {
          auto const r = tensor_of_coverings(a, 0, m, b, 0, k, 3);
          ++instances;
          o.require(r.classification == CoverClass::covering,
                    std::string(ka) + " (x) " + kb + ": " + to_string(r.classification));
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(instances) + " instances" : o.detail;
  return o;
}

Outcome subgroup_identification() {
  Outcome    o;
  int        instances = 0;
  auto const keys = {"cyc:2:2", "cyc:3:2", "cyc:4:2", "cyc:2:3", "cube:2", "point"};
  for (auto const* ka : keys) {
    for (auto const* kb : keys) {
      auto const a = catalogue(ka);
      auto const b = catalogue(kb);
      int const  n = std::clamp(a.dim + b.dim, 2, 3);
      auto const product = FiniteGroup::direct_product(pi1(a, 0), pi1(b, 0));
      o.require(is_isomorphic(pi1(tensor_free(a, b, n).complex, 0), product),
                std::string("pi1 of ") + ka + " (x) " + kb);
      for (auto const& m : pi1_subgroups(a, 0)) {
        auto const r = tensor_covering(a, 0, m, b, n);
        ++instances;
        o.require(r.pi1_matches && r.subgroup_matches,
                  std::string("subgroup of p (x) 1 for ") + ka + ", " + kb);
      }
    }
  }
  o.detail = o.pass ? std::to_string(instances) + " covers" : o.detail;
  return o;
}

Outcome aspherical_tensor() {
  Outcome    o;
  auto const r = certify_aspherical_tensor(catalogue("cyc:2:3"), catalogue("cyc:3:3"), 3);
  o.require(r.asphericity.finite_cover, "cover not finite");
  o.require(r.asphericity.homology.size() == 2 && r.asphericity.homology[0].trivial()
                && r.asphericity.homology[1].trivial(),
            "H1 or H2 nonzero");
  o.require(is_isomorphic(r.asphericity.pi1, FiniteGroup::cyclic(6)), "pi1 is not C6");
  o.detail = o.pass ? "H1 = H2 = 0 at the universal cover, pi1 = C6" : o.detail;
  return o;
}

// The loop f at f(x) lifts to a loop at y: the unique arrow of D out of y
// over it ends at y.
bool loop_lifts(CrossedComplex const& d, CrossedMorphism const& p, int y, int arrow) {
  auto const& g = d.groupoid;
  for (int z = 0; z < d.num_objects(); ++z) {
    for (int e : g.hom(y, z)) {
      if (std::get<int>(p.cells[0][e]) == arrow) {
        return z == y;
      }
    }
  }
  return false;
}

Outcome lifting() {
  Outcome o;
  int     instances = 0;
  for (auto const& cc : concrete_covers()) {
    auto const& c = cc.base;
    auto const& d = cc.cover.complex;
    auto const& p = cc.cover.projection;
    for (auto const* fkey : {"interval", "circle"}) {
      auto const source = catalogue(fkey);
      auto const into_d = oracle::all_morphisms(source, d);
      for (auto const& f : oracle::all_morphisms(source, c)) {
        std::string const key = morphism_key(source, c, f);
        for (int y = 0; y < d.num_objects(); ++y) {
          if (p.object_map[y] != f.object_map[0]) {
            continue;
          }
          ++instances;
          bool const condition = source.graph.edges[0].src != source.graph.edges[0].dst
                                 || loop_lifts(d, p, y, std::get<int>(f.cells[0][0]));
          int        found     = 0;
          for (auto const& g : into_d) {
            if (g.object_map[0] == y
                && morphism_key(source, c, compose(source, d, c, g, p)) == key) {
              ++found;
            }
          }
          auto const r   = lift_morphism(d, c, p, source, f, 0, y);
          auto const tag = cc.name + ", " + fkey + " " + key + " over " + std::to_string(y);
          o.require(r.lift.has_value() == condition, "lift existence vs condition: " + tag);
          o.require(found == (condition ? 1 : 0), "enumerated lifts: " + tag);
          if (r.lift) {
            o.require(morphism_key(source, c, compose(source, d, c, *r.lift, p)) == key,
                      "p o lift != f: " + tag);
          }
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(instances) + " lifting problems" : o.detail;
  return o;
}

Outcome pullback() {
  Outcome o;
  int     instances = 0;
  for (auto const& cc : concrete_covers()) {
    auto const& c = cc.base;
    auto const& d = cc.cover.complex;
    auto const& p = cc.cover.projection;
    for (auto const* fkey : {"interval", "cube:2"}) {
      auto const source = catalogue(fkey);
      // (f, y) with f : F -> C and p(y) = f(x0)
      std::map<std::string, int> pairs;
      for (auto const& f : oracle::all_morphisms(source, c)) {
        for (int y = 0; y < d.num_objects(); ++y) {
          if (p.object_map[y] == f.object_map[0]) {
            pairs[morphism_key(source, c, f) + "@" + std::to_string(y)] = 0;
          }
        }
      }
      std::size_t lifts = 0;
      for (auto const& g : oracle::all_morphisms(source, d)) {
        ++lifts;
        auto const it = pairs.find(morphism_key(source, c, compose(source, d, c, g, p)) + "@"
                                   + std::to_string(g.object_map[0]));
        o.require(it != pairs.end(), "image pair missing: " + cc.name);
        if (it != pairs.end()) {
          ++it->second;
        }
      }
      o.require(lifts == pairs.size(), "cardinalities differ: " + cc.name + ", " + fkey);
      for (auto const& [k, hits] : pairs) {
        o.require(hits == 1, "pair hit " + std::to_string(hits) + " times: " + cc.name);
      }
      ++instances;
    }
  }
  o.detail = o.pass ? std::to_string(instances) + " coverings" : o.detail;
  return o;
}

CoverClass expected_lifting(BoxLifting b) {
  switch (b) {
    case BoxLifting::covering: return CoverClass::covering;
    case BoxLifting::kan_only: return CoverClass::fibration_only;
    case BoxLifting::neither: break;
  }
  return CoverClass::neither;
}

Outcome box_lifting() {
  Outcome o;
  int     instances = 0, skipped = 0;
  for (auto const& m : concrete_catalogue_morphisms()) {
    auto const ls = lambda_truncated(m.src);
    auto const lt = lambda_truncated(m.tgt);
    if (ls.cubes.sizes[2] > max_lambda_squares || lt.cubes.sizes[2] > max_lambda_squares) {
      ++skipped;
      continue;
    }
    auto const f = lambda_map(m.src, ls, m.tgt, lt, m.map);
    ++instances;
    o.require(expected_lifting(has_unique_box_lifting(ls.cubes, lt.cubes, f))
                  == is_covering_morphism(m.src, m.tgt, m.map),
              "disagreement on " + m.name);
  }
  o.detail = o.pass ? std::to_string(instances) + " morphisms, " + std::to_string(skipped)
                          + " over the size bound"
                    : o.detail;
  return o;
}

Outcome thin_fillers() {
  Outcome o;
  long    boxes = 0;
  for (auto const& key : concrete_catalogue_keys()) {
    auto const& k = lambda_truncated(catalogue(key)).cubes;
    for (int n = 2; n <= k.top; ++n) {
      for_each_box(k, n, [&](Box const& b) {
        ++boxes;
        int fillers = 0;
        for (int x = 0; x < k.sizes[n]; ++x) {
          bool match = k.is_thin(n, x);
          for (int i = 1; i <= n && match; ++i) {
            for (int s = 0; s < 2 && match; ++s) {
              match = (i == b.omit_i && s == b.omit_sign) || k.face(n, i, s, x) == b.faces[i - 1][s];
            }
          }
          fillers += match ? 1 : 0;
        }
        o.require(fillers == 1, key + ": box with " + std::to_string(fillers) + " thin fillers");
      });
    }
  }
  o.detail = o.pass ? std::to_string(boxes) + " boxes" : o.detail;
  return o;
}

Outcome homology_oracles() {
  Outcome      o;
  std::mt19937 rng(homology_seed);
  for (int t = 0; t < homology_samples; ++t) {
    auto const                c = oracle::random_chain_complex(rng);
    std::vector<AbelianGroup> h;
    for (int n = 0; n <= c.top(); ++n) {
      h.push_back(chain_homology(c, n));
      o.require(h.back() == oracle::chain_homology(c, n),
                "determinantal divisors disagree, sample " + std::to_string(t));
    }
    for (int m : {2, 3, 4}) {
      for (int n = 0; n <= c.top(); ++n) {
        o.require(oracle::mod_homology_order(c, n, m)
                      == oracle::mod_homology_prediction(h[n], n > 0 ? &h[n - 1] : nullptr, m),
                  "mod " + std::to_string(m) + " count disagrees, sample " + std::to_string(t));
      }
    }
  }
  o.detail = o.pass ? std::to_string(homology_samples) + " complexes" : o.detail;
  return o;
}

Outcome mutations() {
  Outcome o;
  int     count = 0;
  std::vector<std::filesystem::path> files;
  for (auto const& entry : std::filesystem::directory_iterator(XCRS_MUTATIONS_DIR)) {
    if (entry.path().extension() == ".xcrs") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (auto const& file : files) {
    std::ostringstream out, err;
    int const          code = run_cli({"check", file.string()}, out, err);
    ++count;
    o.require(code == exit_failure && out.str().find("violation: ") != std::string::npos,
              file.filename().string() + " not caught");
  }
  o.require(count >= min_mutations, "only " + std::to_string(count) + " mutations");
  o.detail = o.pass ? std::to_string(count) + " mutations caught" : o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string              name;
    std::function<Outcome()> run;
    double                   budget = 0;  // seconds, 0 = unbounded
  };
  std::vector<Criterion> const criteria = {
      {"cube tensor law", cube_law, budget_cube_law},
      {"tensor of coverings is a covering", tensor_of_covers, budget_tensor_cover},
      {"pi1 of tensors and cover subgroups", subgroup_identification, 0},
      {"aspherical tensor cover", aspherical_tensor, budget_aspherical},
      {"unique lifting", lifting, 0},
      {"pullback bijection", pullback, 0},
      {"box lifting matches covering", box_lifting, 0},
      {"unique thin fillers", thin_fillers, 0},
      {"homology against oracles", homology_oracles, budget_homology},
      {"mutation robustness", mutations, 0},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const& c     = criteria[i];
    auto const  start = std::chrono::steady_clock::now();
    Outcome     o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) {
      o.require(false, "over budget");
    }
    all = all && o.pass;
    std::printf("criterion %2zu: %s  %s (%s, %.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL",
                c.name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
