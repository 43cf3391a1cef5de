#include "xcrs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include "xcrs/catalogue.hpp"
#include "xcrs/cover.hpp"
#include "xcrs/cubical.hpp"
#include "xcrs/homology.hpp"
#include "xcrs/tensor.hpp"
#include "xcrs/xcrs_format.hpp"

namespace xcrs {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Report body plus the key=value trailer.
struct Output {
  std::ostringstream                               body;
  std::vector<std::pair<std::string, std::string>> trailer;
  bool                                             verbose = false;

  void kv(std::string key, std::string value) {
    trailer.emplace_back(std::move(key), std::move(value));
  }
  void kv(std::string key, long value) { kv(std::move(key), std::to_string(value)); }
};

bool verbose_requested() {
  char const* v = std::getenv("XCRS_VERBOSE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::string join(std::vector<int> const& xs, char const* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? sep : "") + std::to_string(xs[i]);
  }
  return s;
}

std::string indent(std::string const& text) {
  std::string out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    out += "  " + line + "\n";
  }
  return out;
}

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  std::string              cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// --- inputs ------------------------------------------------------------------------

// A path to an XCRS file, or else a catalogue key.
XcrsDocument load_document(std::string const& spec) {
  if (std::filesystem::exists(spec)) {
    return read_xcrs_file(spec);
  }
  CrossedComplex c;
  try {
    c = catalogue(spec);
  } catch (DomainError const& e) {
    throw UsageError("'" + spec + "' is neither a file nor a catalogue key (" + e.what() + ")");
  }
  XcrsDocument doc;
  doc.complexes.push_back({"main", std::move(c)});
  return doc;
}

XcrsDocument::NamedComplex const& pick_complex(XcrsDocument const& doc, std::string const& name) {
  if (doc.complexes.empty()) {
    throw UsageError("document holds no complex");
  }
  if (name.empty()) {
    return doc.complexes.front();
  }
  for (auto const& c : doc.complexes) {
    if (c.name == name) {
      return c;
    }
  }
  throw UsageError("no complex named '" + name + "'");
}

XcrsDocument::NamedMorphism const& pick_morphism(XcrsDocument const& doc, std::string const& name) {
  if (doc.morphisms.empty()) {
    throw UsageError("document holds no morphism");
  }
  if (name.empty()) {
    return doc.morphisms.front();
  }
  for (auto const& m : doc.morphisms) {
    if (m.name == name) {
      return m;
    }
  }
  throw UsageError("no morphism named '" + name + "'");
}

int pick_vertex(CrossedComplex const& c, std::string const& name) {
  if (name.empty()) {
    return 0;
  }
  int const x = c.object_index(name);
  if (x < 0) {
    throw UsageError("unknown object '" + name + "'");
  }
  return x;
}

// A loop at x written as '.'-separated letters "a" or "a^-1"; "1" is the identity.
Word parse_loop(Graph const& g, int x, std::string const& text) {
  Word w{x, {}};
  for (auto const& tok : split(text, '.')) {
    if (tok == "1") {
      continue;
    }
    bool const  inv  = tok.size() > 3 && tok.ends_with("^-1");
    std::string name = inv ? tok.substr(0, tok.size() - 3) : tok;
    int const   e    = g.edge_index(name);
    if (e < 0) {
      throw UsageError("unknown edge '" + name + "' in subgroup generator '" + text + "'");
    }
    w.letters.push_back({e, inv});
  }
  try {
    if (word_end(g, w) != x) {
      throw UsageError("subgroup generator '" + text + "' is not a loop");
    }
  } catch (DomainError const&) {
    throw UsageError("subgroup generator '" + text + "' is not a path");
  }
  return reduce(g, w);
}

// "trivial", "all", or a comma list of loops (free) or arrow names (concrete).
Pi1Subgroup parse_subgroup(CrossedComplex const& c, int x, std::string const& spec) {
  Pi1Subgroup m;
  if (spec == "all") {
    m.all = true;
    return m;
  }
  if (spec == "trivial") {
    return m;
  }
  for (auto const& tok : split(spec, ',')) {
    if (c.regime == Regime::free) {
      m.loops.push_back(parse_loop(c.graph, x, tok));
    } else {
      int const a = c.groupoid.arrow_index(tok);
      if (a < 0) {
        throw UsageError("unknown arrow '" + tok + "'");
      }
      m.arrows.push_back(a);
    }
  }
  return m;
}

std::string generator_name(CrossedComplex const& c, int n, int i) {
  if (n == 0) {
    return c.object_names()[i];
  }
  if (c.regime == Regime::free) {
    return n == 1 ? c.graph.edges[i].name : c.basis(n).names[i];
  }
  if (n == 1) {
    return c.groupoid.arrow_names[i];
  }
  auto const [p, l] = c.layer(n).locate(i);
  return c.layer(n).groups[p].names[l] + "@" + c.object_names()[p];
}

void report_check(Output& o, std::string const& what, Report const& r, int& failures) {
  if (r.pass()) {
    o.body << what << ": pass\n";
  } else {
    ++failures;
    o.body << what << ": FAIL\n" << indent(r.to_string());
  }
}

// --- commands ----------------------------------------------------------------------

int cmd_check(Output& o, std::string const& file) {
  auto const doc      = load_document(file);
  int        failures = 0;
  for (auto const& c : doc.complexes) {
    report_check(o, "complex " + c.name, check_crossed_complex_axioms(c.complex), failures);
  }
  for (auto const& m : doc.morphisms) {
    report_check(o, "morphism " + m.name,
                 check_crossed_morphism(doc.complex(m.source), doc.complex(m.target), m.map),
                 failures);
  }
  for (auto const& k : doc.cubicals) {
    report_check(o, "cubical " + k.name, check_cubical_laws(k.cubes), failures);
  }
  o.kv("complexes", static_cast<long>(doc.complexes.size()));
  o.kv("morphisms", static_cast<long>(doc.morphisms.size()));
  o.kv("cubicals", static_cast<long>(doc.cubicals.size()));
  o.kv("failures", failures);
  return failures == 0 ? exit_pass : exit_failure;
}

int cmd_cover(Output& o, std::string const& file, std::string const& complex_name,
              std::string const& vertex, std::string const& subgroup, std::string const& out_file) {
  auto const  doc = load_document(file);
  auto const& nc  = pick_complex(doc, complex_name);
  auto const& c   = nc.complex;
  int const   x   = pick_vertex(c, vertex);
  auto const  cv  = universal_cover(c, x, parse_subgroup(c, x, subgroup));
  int const   index = cv.complex.num_objects() / c.num_objects();
  auto const  cls   = is_covering_morphism(cv.complex, c, cv.projection);
  auto const  axioms = check_crossed_complex_axioms(cv.complex);
  o.body << "index = " << index << "\n";
  o.body << "cover cells = " << join(cv.complex.cell_counts()) << "\n";
  o.body << "cover axioms: " << (axioms.pass() ? "pass" : "FAIL") << "\n";
  if (!axioms.pass()) {
    o.body << indent(axioms.to_string());
  }
  o.body << "p classified " << to_string(cls) << "\n";
  o.body << "pi1 of cover = " << describe(pi1(cv.complex, cv.base_lift)) << "\n";
  if (!out_file.empty()) {
    XcrsDocument out;
    out.complexes = {{"base", c}, {"cover", cv.complex}};
    out.morphisms = {{"p", "cover", "base", cv.projection}};
    write_text_file(out_file, serialize(out));
  }
  o.kv("index", index);
  o.kv("classification", to_string(cls));
  return cls == CoverClass::covering && axioms.pass() ? exit_pass : exit_failure;
}

int cmd_lift(Output& o, std::string const& cover_file, std::string const& cover_morphism,
             std::string const& map_file, std::string const& map_morphism,
             std::string const& base, std::string const& over, std::string const& out_file) {
  auto const  cdoc = load_document(cover_file);
  auto const& p    = pick_morphism(cdoc, cover_morphism);
  auto const& d    = cdoc.complex(p.source);
  auto const& c    = cdoc.complex(p.target);
  auto const  fdoc = load_document(map_file);
  auto const& f    = pick_morphism(fdoc, map_morphism);
  auto const& src  = fdoc.complex(f.source);
  if (serialize(fdoc.complex(f.target), "c") != serialize(c, "c")) {
    throw UsageError("the map's target differs from the base of the cover");
  }
  int const x = pick_vertex(src, base);
  int const y = pick_vertex(d, over);
  auto const r = lift_morphism(d, c, p.map, src, f.map, x, y);
  o.kv("lift", r.lift ? "yes" : "no");
  if (!r.lift) {
    o.body << "no lift: " << r.witness << "\n";
    return exit_failure;
  }
  o.body << "lift exists\n";
  auto const& lift = *r.lift;
  for (int u = 0; u < src.num_objects(); ++u) {
    o.body << "  " << src.object_names()[u] << " -> " << d.object_names()[lift.object_map[u]] << "\n";
  }
  for (int n = 1; n <= src.dim; ++n) {
    for (std::size_t i = 0; i < lift.cells[n - 1].size(); ++i) {
      o.body << "  " << generator_name(src, n, static_cast<int>(i)) << " -> "
             << to_string(d, n, lift.cells[n - 1][i]) << "\n";
    }
  }
  auto const back  = compose(src, d, c, lift, p.map);
  bool       equal = back.object_map == f.map.object_map;
  for (int n = 1; n <= src.dim && equal; ++n) {
    for (std::size_t i = 0; i < back.cells[n - 1].size() && equal; ++i) {
      equal = images_equal(c, n, back.cells[n - 1][i], f.map.cells[n - 1][i]);
    }
  }
  o.body << "p o lift = f: " << (equal ? "yes" : "NO") << "\n";
  if (!out_file.empty()) {
    XcrsDocument out;
    out.complexes = {{"source", src}, {"cover", d}};
    out.morphisms = {{"lift", "source", "cover", lift}};
    write_text_file(out_file, serialize(out));
  }
  o.kv("commutes", equal ? "yes" : "no");
  return equal ? exit_pass : exit_failure;
}

int cmd_tensor(Output& o, std::string const& left, std::string const& right,
               std::string const& out_file, int maxdim) {
  auto const a = pick_complex(load_document(left), "").complex;
  auto const b = pick_complex(load_document(right), "").complex;
  if (a.regime != Regime::free || b.regime != Regime::free) {
    throw UsageError("tensor needs free complexes");
  }
  auto const t      = tensor_free(a, b, maxdim);
  auto const axioms = check_crossed_complex_axioms(t.complex);
  o.body << "dim = " << t.complex.dim << "\n";
  o.body << "basis counts = " << join(t.complex.cell_counts()) << "\n";
  o.body << "axioms: " << (axioms.pass() ? "pass" : "FAIL") << "\n";
  if (!axioms.pass()) {
    o.body << indent(axioms.to_string());
  }
  write_text_file(out_file, serialize(t.complex, "tensor"));
  o.kv("dim", t.complex.dim);
  return axioms.pass() ? exit_pass : exit_failure;
}

int cmd_homology(Output& o, std::string const& file, std::string const& complex_name, int k,
                 std::string const& vertex) {
  auto const c = pick_complex(load_document(file), complex_name).complex;
  int const   x = pick_vertex(c, vertex);
  auto const  h = homology_at_vertex(c, x, k);
  o.body << "H" << k << " = " << to_string(h) << "\n";
  o.kv("rank", h.rank);
  o.kv("torsion", static_cast<long>(h.torsion.size()));
  return exit_pass;
}

int cmd_pi1(Output& o, std::string const& file, std::string const& complex_name,
            std::string const& vertex) {
  auto const c = pick_complex(load_document(file), complex_name).complex;
  auto const  g = pi1(c, pick_vertex(c, vertex));
  o.body << "pi1 = " << describe(g) << "\n";
  o.kv("order", g.order());
  return exit_pass;
}

int cmd_cubical_check(Output& o, std::string const& file) {
  auto const doc      = load_document(file);
  int        failures = 0;
  int        checked  = 0;
  for (auto const& k : doc.cubicals) {
    report_check(o, "cubical " + k.name, check_cubical_laws(k.cubes), failures);
    ++checked;
  }
  if (doc.cubicals.empty()) {
    // no tables given: check lambda of every concrete complex instead
    for (auto const& c : doc.complexes) {
      if (c.complex.regime != Regime::concrete) {
        continue;
      }
      auto const l = lambda_truncated(c.complex);
      report_check(o, "lambda(" + c.name + ") top " + std::to_string(l.cubes.top),
                   check_cubical_laws(l.cubes), failures);
      ++checked;
    }
  }
  if (checked == 0) {
    throw UsageError("nothing to check: no cubical tables and no concrete complexes");
  }
  o.kv("checked", checked);
  o.kv("failures", failures);
  return failures == 0 ? exit_pass : exit_failure;
}

int cmd_lambda(Output& o, std::string const& file, std::string const& complex_name,
               std::string const& out_file) {
  auto const nc = pick_complex(load_document(file), complex_name);
  if (nc.complex.regime != Regime::concrete) {
    throw UsageError("lambda needs a concrete complex");
  }
  auto const l = lambda_truncated(nc.complex);
  o.body << "top = " << l.cubes.top << "\n";
  o.body << "sizes = " << join(std::vector<int>(l.cubes.sizes.begin(), l.cubes.sizes.begin() + l.cubes.top + 1)) << "\n";
  XcrsDocument out;
  out.cubicals = {{nc.name, l.cubes}};
  write_text_file(out_file, serialize(out));
  o.kv("top", l.cubes.top);
  return exit_pass;
}

// --- theorem verification ----------------------------------------------------------

CrossedComplex load_free(std::string const& spec) {
  auto c = pick_complex(load_document(spec), "").complex;
  if (c.regime != Regime::free) {
    throw UsageError("'" + spec + "' is not a free complex");
  }
  return c;
}

int verify_thm61(Output& o, std::string const& left, std::string const& right, int maxdim) {
  auto const a         = load_free(left);
  auto const b         = load_free(right);
  int        instances = 0;
  int        failures  = 0;
  auto const record    = [&](TensorCoveringReport const& r, std::string const& what) {
    ++instances;
    bool const ok = r.pass();
    failures += ok ? 0 : 1;
    o.body << what << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok || o.verbose) {
      o.body << indent(r.to_string());
    }
    return ok;
  };
  auto const ms   = pi1_subgroups(a, 0);
  auto const ks   = pi1_subgroups(b, 0);
  bool       ones = true;
  for (auto const& m : ms) {
    auto const r = tensor_covering(a, 0, m, b, maxdim);
    ones         = record(r, "p(x)1 at index " + std::to_string(r.cover_index)) && ones;
  }
  bool twos = true;
  for (auto const& m : ms) {
    for (auto const& k : ks) {
      auto const r = tensor_of_coverings(a, 0, m, b, 0, k, maxdim);
      twos         = record(r, "p(x)q at index " + std::to_string(r.cover_index)) && twos;
    }
  }
  if (ones) {
    o.body << "p(x)1 classified covering\n";
  }
  if (twos) {
    o.body << "p(x)q classified covering\n";
  }
  o.kv("instances", instances);
  o.kv("failures", failures);
  return failures == 0 ? exit_pass : exit_failure;
}

int verify_cor65(Output& o, std::string const& left, std::string const& right, int maxdim) {
  auto const a = load_free(left);
  auto const b = load_free(right);
  auto const r = certify_aspherical_tensor(a, b, maxdim);
  if (!r.asphericity.finite_cover) {
    o.body << "universal cover of the tensor is not finite within bound\n";
    return exit_failure;
  }
  auto const& hs       = r.asphericity.homology;
  bool const  all_zero = std::all_of(hs.begin(), hs.end(), [](auto const& h) { return h.trivial(); });
  std::string summary;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    summary += (i ? (all_zero ? " = " : ", ") : "") + ("H" + std::to_string(i + 1));
    if (!all_zero) {
      summary += " = " + to_string(hs[i]);
    }
  }
  if (all_zero) {
    summary += " = 0";
  }
  o.body << summary << " at cover of tensor; pi1 = " << describe(r.asphericity.pi1) << "\n";
  o.body << "tensor axioms: " << (r.dd_trivial ? "pass" : "FAIL") << "\n";
  o.body << "pi1 matches product " << describe(r.pi1_product) << ": "
         << (r.pi1_matches ? "yes" : "NO") << "\n";
  if (o.verbose) {
    o.body << indent(r.to_string());
  }
  o.kv("aspherical", r.asphericity.aspherical ? "yes" : "no");
  o.kv("pi1_order", r.asphericity.pi1.order());
  return r.pass() ? exit_pass : exit_failure;
}

// Cubical side: lambda laws and thin fillers, and box lifting against the
// crossed-complex covering test on the identity and every cover.
int verify_sec4(Output& o, std::string const& left, std::string const& right, int maxdim) {
  if (maxdim < 2 || maxdim > max_cubical_dim) {
    throw UsageError("thm-sec4 needs --maxdim 2 or 3");
  }
  int const cap       = maxdim == 2 ? 0 : lambda_cube_cap;
  int       instances = 0;
  int       failures  = 0;
  for (auto const& spec : {left, right}) {
    auto const c = pick_complex(load_document(spec), "").complex;
    if (c.regime != Regime::concrete) {
      throw UsageError("'" + spec + "' is not a concrete complex; lambda needs finite groups");
    }
    auto const l = lambda_truncated(c, cap);
    ++instances;
    report_check(o, "lambda(" + spec + ") top " + std::to_string(l.cubes.top) + " laws and fillers",
                 check_cubical_laws(l.cubes), failures);
    std::vector<std::pair<std::string, Cover>> maps;
    Cover                                      id;
    id.complex    = c;
    id.projection = identity_morphism(c);
    maps.emplace_back("identity", std::move(id));
    for (auto const& m : pi1_subgroups(c, 0)) {
      auto cv    = universal_cover(c, 0, m);
      auto index = cv.complex.num_objects() / c.num_objects();
      maps.emplace_back("cover of index " + std::to_string(index), std::move(cv));
    }
    for (auto const& [what, cv] : maps) {
      ++instances;
      auto const lu  = lambda_truncated(cv.complex, cap);
      auto const f   = lambda_map(cv.complex, lu, c, l, cv.projection);
      auto const box = has_unique_box_lifting(lu.cubes, l.cubes, f);
      auto const cls = is_covering_morphism(cv.complex, c, cv.projection);
      bool const ok  = (box == BoxLifting::covering) == (cls == CoverClass::covering);
      failures += ok ? 0 : 1;
      o.body << spec << " " << what << ": box lifting " << to_string(box) << ", crossed "
             << to_string(cls) << (ok ? "" : " DISAGREE") << "\n";
    }
  }
  o.kv("instances", instances);
  o.kv("failures", failures);
  return failures == 0 ? exit_pass : exit_failure;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossed complexes, covering morphisms, tensor products and cubical checks", "xcrs"};
  app.require_subcommand(1);

  std::string file, complex_name, vertex, subgroup, out_file, left, right, theorem;
  std::string cover_file, cover_morphism, map_file, map_morphism, base, over;
  int         maxdim = 3;
  int         dim    = 2;

  auto* check = app.add_subcommand("check", "check axioms and laws of every block in a file");
  check->add_option("file", file, "XCRS file or catalogue key")->required();

  auto* cover = app.add_subcommand("cover", "build the cover for a subgroup of pi_1");
  cover->add_option("file", file, "XCRS file or catalogue key")->required();
  cover->add_option("--complex", complex_name, "complex to use (default: first)");
  cover->add_option("--vertex", vertex, "basepoint (default: first object)");
  cover->add_option("--subgroup", subgroup, "trivial, all, or generators separated by ','")
      ->required();
  cover->add_option("-o", out_file, "write base, cover and projection");

  auto* lift = app.add_subcommand("lift", "lift a morphism through a covering");
  lift->add_option("--cover", cover_file, "file holding the covering p: D -> C")->required();
  lift->add_option("--cover-morphism", cover_morphism, "morphism name (default: first)");
  lift->add_option("--map", map_file, "file holding f: F -> C")->required();
  lift->add_option("--map-morphism", map_morphism, "morphism name (default: first)");
  lift->add_option("--base", base, "basepoint of F")->required();
  lift->add_option("--over", over, "object of D over f(base)")->required();
  lift->add_option("-o", out_file, "write the lift");

  auto* tensor = app.add_subcommand("tensor", "tensor product of two free complexes");
  tensor->add_option("left", left, "XCRS file or catalogue key")->required();
  tensor->add_option("right", right, "XCRS file or catalogue key")->required();
  tensor->add_option("-o", out_file, "output file")->required();
  tensor->add_option("--maxdim", maxdim, "truncation dimension")->required();

  auto* homology = app.add_subcommand("homology", "H_K at a vertex");
  homology->add_option("file", file, "XCRS file or catalogue key")->required();
  homology->add_option("--complex", complex_name, "complex to use (default: first)");
  homology->add_option("--dim", dim, "dimension K")->required();
  homology->add_option("--vertex", vertex, "vertex (default: first object)");

  auto* fundamental = app.add_subcommand("pi1", "fundamental group at a vertex");
  fundamental->add_option("file", file, "XCRS file or catalogue key")->required();
  fundamental->add_option("--complex", complex_name, "complex to use (default: first)");
  fundamental->add_option("--vertex", vertex, "vertex (default: first object)");

  auto* cubical = app.add_subcommand("cubical-check", "check cubical operator tables");
  cubical->add_option("file", file, "XCRS file or catalogue key")->required();

  auto* lambda = app.add_subcommand("lambda", "cubical object of a concrete complex");
  lambda->add_option("file", file, "XCRS file or catalogue key")->required();
  lambda->add_option("--complex", complex_name, "complex to use (default: first)");
  lambda->add_option("-o", out_file, "output file")->required();

  auto* verify = app.add_subcommand("verify", "check a theorem on desk-scale instances");
  verify->add_option("theorem", theorem, "thm61, cor65 or thm-sec4")
      ->required()
      ->check(CLI::IsMember({"thm61", "cor65", "thm-sec4"}));
  verify->add_option("--left", left, "catalogue key or file")->required();
  verify->add_option("--right", right, "catalogue key or file")->required();
  verify->add_option("--maxdim", maxdim, "truncation dimension");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  Output o;
  o.verbose          = verbose_requested();
  std::string const command = app.get_subcommands().front()->get_name();
  int               code    = exit_usage;
  try {
    if (command == "check") {
      code = cmd_check(o, file);
    } else if (command == "cover") {
      code = cmd_cover(o, file, complex_name, vertex, subgroup, out_file);
    } else if (command == "lift") {
      code = cmd_lift(o, cover_file, cover_morphism, map_file, map_morphism, base, over, out_file);
    } else if (command == "tensor") {
      code = cmd_tensor(o, left, right, out_file, maxdim);
    } else if (command == "homology") {
      code = cmd_homology(o, file, complex_name, dim, vertex);
    } else if (command == "pi1") {
      code = cmd_pi1(o, file, complex_name, vertex);
    } else if (command == "cubical-check") {
      code = cmd_cubical_check(o, file);
    } else if (command == "lambda") {
      code = cmd_lambda(o, file, complex_name, out_file);
    } else if (theorem == "thm61") {
      code = verify_thm61(o, left, right, maxdim);
    } else if (theorem == "cor65") {
      code = verify_cor65(o, left, right, maxdim);
    } else {
      code = verify_sec4(o, left, right, maxdim);
    }
  } catch (BoundExceeded const& e) {
    err << "xcrs: undecided: " << e.what() << "\n";
    o.kv("error", "bound");
  } catch (std::exception const& e) {
    err << "xcrs: " << e.what() << "\n";
    o.kv("error", "input");
  }

  out << o.body.str() << "--\n";
  out << "command=" << (command == "verify" ? command + " " + theorem : command) << "\n";
  for (auto const& [k, v] : o.trailer) {
    out << k << "=" << v << "\n";
  }
  out << "result=" << (code == exit_pass ? "pass" : code == exit_failure ? "fail" : "error") << "\n";
  return code;
}

}  // namespace xcrs
