#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "xcrs/catalogue.hpp"
#include "xcrs/cli.hpp"

using namespace xcrs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int         code = -1;
  std::string out, err;

  bool says(std::string const& s) const { return out.find(s) != std::string::npos; }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run                r;
  r.code = run_cli(args, out, err);
  r.out  = out.str();
  r.err  = err.str();
  return r;
}

// Scratch directory removed on scope exit.
struct Scratch {
  fs::path dir;

  Scratch() {
    dir = fs::temp_directory_path() / ("xcrs_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }

  std::string write(std::string const& name, std::string const& text) const {
    auto const p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(std::string const& name) const { return (dir / name).string(); }
};

std::string const base_doc = "xcrs 1\n"
                             "complex base\nregime free\ndim 2\nobjects: v\nedges:\n  x v v\n"
                             "basis 2:\n  r v : x x\n";

std::string map_doc(std::string const& image) {
  return base_doc
         + "complex circle\nregime free\ndim 1\nobjects: u\nedges:\n  a u u\n"
           "morphism f circle base\nobjects:\n  u : v\ncells 1:\n  a : "
         + image + "\n";
}

}  // namespace

TEST_CASE("verify thm61 desk instance") {
  auto const r = run({"verify", "thm61", "--left", "cyc:2:2", "--right", "cyc:2:2", "--maxdim", "3"});
  CHECK(r.code == exit_pass);
  CHECK(r.says("p(x)1 classified covering"));
  CHECK(r.says("result=pass"));
}

TEST_CASE("verify cor65 desk instance") {
  auto const r = run({"verify", "cor65", "--left", "cyc:2:3", "--right", "cyc:3:3", "--maxdim", "3"});
  CHECK(r.code == exit_pass);
  CHECK(r.says("H1 = H2 = 0 at cover of tensor; pi1 = C6"));
}

TEST_CASE("verify thm-sec4 on small groups") {
  auto const r = run({"verify", "thm-sec4", "--left", "cgrp:2", "--right", "cgrp:3"});
  CHECK(r.code == exit_pass);
  CHECK_FALSE(r.says("DISAGREE"));
}

TEST_CASE("every catalogue key passes check") {
  for (auto const& key : catalogue_keys()) {
    CAPTURE(key);
    auto const r = run({"check", key});
    CHECK(r.code == exit_pass);
  }
}

TEST_CASE("every shipped mutation fails check with a witness") {
  int count = 0;
  for (auto const& entry : fs::directory_iterator(XCRS_MUTATIONS_DIR)) {
    if (entry.path().extension() != ".xcrs") {
      continue;
    }
    ++count;
    CAPTURE(entry.path().filename().string());
    auto const r = run({"check", entry.path().string()});
    CHECK(r.code == exit_failure);
    CHECK(r.says("result=fail"));
    CHECK(r.says("violation: "));
  }
  CHECK(count >= 20);
}

TEST_CASE("reports are deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"pi1", "s3"}, {"homology", "cxm:4:1:0", "--dim", "2"},
        {"cover", "cyc:4:2", "--subgroup", "x.x"},
        {"verify", "cor65", "--left", "cyc:2:3", "--right", "cyc:3:3", "--maxdim", "3"}}) {
    auto const a = run(args);
    auto const b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"check", "/nonexistent/file.xcrs"}).code == exit_usage);
  CHECK(run({"check", "cube:9"}).code == exit_usage);
  CHECK(run({"homology", "cxm:4:1:0"}).code == exit_usage);
  CHECK(run({"verify", "thm99", "--left", "cyc:2:2", "--right", "cyc:2:2"}).code == exit_usage);
  CHECK(run({"pi1", "circle"}).code == exit_usage);

  Scratch s;
  auto const bad = s.write("bad.xcrs", "xcrs 1\ncomplex c\nregime free\ndim 1\nobjects: v\nedges:\n  e v w\n");
  auto const r   = run({"check", bad});
  CHECK(r.code == exit_usage);
  CHECK(r.says("result=error"));
}

TEST_CASE("cover, pi1, homology, tensor and lambda round trips") {
  Scratch s;
  auto const cover = run({"cover", "cyc:4:2", "--subgroup", "x.x", "-o", s.path("cover.xcrs")});
  CHECK(cover.code == exit_pass);
  CHECK(cover.says("index = 2"));
  CHECK(run({"check", s.path("cover.xcrs")}).code == exit_pass);

  auto const g = run({"pi1", "s3"});
  CHECK(g.code == exit_pass);
  CHECK(g.says("order=6"));

  CHECK(run({"homology", "cxm:4:1:0", "--dim", "2"}).says("Z/4"));

  auto const t = run({"tensor", "cube:1", "cube:1", "-o", s.path("sq.xcrs"), "--maxdim", "2"});
  CHECK(t.code == exit_pass);
  CHECK(run({"check", s.path("sq.xcrs")}).code == exit_pass);

  CHECK(run({"lambda", "cgrp:2", "-o", s.path("l.xcrs")}).code == exit_pass);
  CHECK(run({"cubical-check", s.path("l.xcrs")}).code == exit_pass);
  CHECK(run({"cubical-check", "s3"}).code == exit_pass);
}

TEST_CASE("lift through the double cover of cyc:2:2") {
  Scratch s;
  REQUIRE(run({"cover", "cyc:2:2", "--subgroup", "trivial", "-o", s.path("cv.xcrs")}).code
          == exit_pass);
  auto const even = s.write("even.xcrs", map_doc("x x"));
  auto const odd  = s.write("odd.xcrs", map_doc("x"));

  auto const yes = run({"lift", "--cover", s.path("cv.xcrs"), "--map", even, "--base", "u", "--over",
                        "v~1"});
  CHECK(yes.code == exit_pass);
  CHECK(yes.says("p o lift = f: yes"));

  auto const no = run({"lift", "--cover", s.path("cv.xcrs"), "--map", odd, "--base", "u", "--over",
                       "v~0"});
  CHECK(no.code == exit_failure);
  CHECK(no.says("no lift"));
}
