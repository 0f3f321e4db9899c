#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "support.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = vbraid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("vbraid_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

bool has(const std::string& text, const std::string& piece) {
  return text.find(piece) != std::string::npos;
}

}  // namespace

using vbraid::cli::kInputError;
using vbraid::cli::kOk;
using vbraid::cli::kVerificationFailed;

TEST_CASE("word subcommands") {
  auto r = run({"word", "reduce", "v1 v1", "--kind", "VB", "-n", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out == "e\n");
  r = run({"word", "perm", "s1 s2", "--kind", "B", "-n", "3"});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "[3 1 2]"));
  CHECK(has(r.out, "cycles: 1"));
  r = run({"word", "compose", "s1", "v2", "--kind", "VB", "-n", "3"});
  CHECK(r.out == "s1 v2\n");
  r = run({"word", "invert", "s1 v2", "--kind", "VB", "-n", "3"});
  CHECK(r.out == "v2 s1^-1\n");
  CHECK(run({"word", "reduce", "s9", "--kind", "VB", "-n", "3"}).code == kInputError);
  CHECK(run({"word", "reduce", "v1", "--kind", "ZZ", "-n", "3"}).code == kInputError);
}

TEST_CASE("present") {
  auto r = run({"present", "VB", "3"});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "relator braid(1): s1 s2 s1 = s2 s1 s2"));
  r = run({"present", "WB", "4", "--reduced", "--json"});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "\"schema\": 1"));
  CHECK(has(r.out, "reduced-F1"));
  r = run({"present", "WB", "4", "--single-welded"});
  CHECK(has(r.out, "# v2 = s1^-1 s2^-1 v1 s2 s1"));
  CHECK(run({"present", "B", "3", "--reduced"}).code == kInputError);
}

TEST_CASE("verify") {
  auto r = run({"verify", "identities", "--n", "7"});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "PASS"));
  CHECK(run({"verify", "lemmas", "--n", "5"}).code == kOk);
  r = run({"verify", "reduction", "WB", "3"});
  CHECK(r.code == kOk);
  r = run({"verify", "maps", "--n", "3", "--samples", "20"});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "path pairs agree"));
}

TEST_CASE("gauss and invariants") {
  auto r = run({"gauss", "--parse", "o1+u2+u1+o2+"});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "components: 1"));
  CHECK(has(r.out, "crossings: 2"));
  r = run({"gauss", "--parse", "o1+u1-"});
  CHECK(r.code == kInputError);
  CHECK(has(r.err, "sign mismatch"));
  r = run({"gauss", support::fixture_path("virtual_trefoil.diagram"), "--json"});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "\"crossings\": 2"));
  r = run({"invariants", support::fixture_path("flat_h_link.diagram")});
  CHECK(r.code == kOk);
  CHECK(has(r.out, "components: 2"));
  CHECK(run({"invariants", "/nonexistent/file.diagram"}).code == kInputError);
  const auto bad = temp_file("open.diagram", "category virtual\ncup L 1\n");
  CHECK(run({"invariants", bad}).code == kInputError);
}

TEST_CASE("braid and closure") {
  auto r = run({"braid", support::fixture_path("virtual_trefoil.diagram")});
  CHECK(r.code == kOk);
  auto golden = support::read_file(support::fixture_path("virtual_trefoil.braid"));
  CHECK(has(r.out, golden));
  CHECK(has(r.out, "strands: 4"));
  CHECK(run({"braid", support::fixture_path("virtual_trefoil.diagram"), "--category", "flat"}).code ==
        kInputError);
  r = run({"braid", support::fixture_path("classical_trefoil_up.diagram"), "--under"});
  CHECK(r.code == kOk);
  CHECK_FALSE(has(r.out, "v"));

  r = run({"closure", "v1 s1 s1", "--kind", "VB", "-n", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out.rfind("category virtual", 0) == 0);
  const auto file = temp_file("closure.diagram", r.out);
  r = run({"gauss", file});
  CHECK(has(r.out, "o1+u2+u1+o2+"));
}

TEST_CASE("map") {
  auto r = run({"map", "s1^-1", "--from", "VB", "--to", "FV", "-n", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out == "c1\n");
  r = run({"map", "s1 s2", "--from", "B", "--to", "S", "-n", "3"});
  CHECK(has(r.out, "permutation: [3 1 2]"));
  r = run({"map", "s1 v2", "--from", "VB", "--to", "FU", "--via", "WB", "-n", "3"});
  CHECK(r.code == kOk);
  CHECK(r.out == "c1 v2\n");
  CHECK(run({"map", "s1", "--from", "S", "--to", "B", "-n", "2"}).code == kInputError);
}

TEST_CASE("render") {
  auto r = run({"render", "v1", "--kind", "VB", "-n", "2", "--format", "ascii"});
  CHECK(r.code == kOk);
  CHECK(std::count(r.out.begin(), r.out.end(), 'O') == 1);
  r = run({"render", support::fixture_path("virtual_trefoil.diagram"), "--format", "ascii"});
  CHECK(r.out == support::read_file(support::fixture_path("virtual_trefoil.ascii")));
  r = run({"render", support::fixture_path("flat_h_link.diagram"), "--format", "svg"});
  CHECK(r.code == kOk);
  CHECK(support::xml_balanced(r.out));
  CHECK(run({"render", "v1", "-n", "2", "--format", "png"}).code == kInputError);
}

TEST_CASE("script run and emit") {
  auto r = run({"script", "run", support::fixture_path("braid_relation_n4.script")});
  CHECK(r.code == kOk);
  r = run({"script", "emit", "--n", "4", "--name", "braid-relation(2)-n4"});
  CHECK(r.code == kOk);
  CHECK(r.out == support::read_file(support::fixture_path("braid_relation_n4.script")));
  const auto broken = temp_file(
      "broken.script",
      "script broken kind=VB n=3 autoreduce=0 relations=full\n"
      "start: s1 s2 s1\nstep: braid(1) L2R @1\ntarget: s2 s1 s2\n");
  r = run({"script", "run", broken});
  CHECK(r.code == kVerificationFailed);
  CHECK(has(r.err, "broken"));
  CHECK(run({"script", "run", temp_file("garbage.script", "not a script\n")}).code == kInputError);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == kInputError);
  CHECK(run({"frobnicate"}).code == kInputError);
  CHECK(run({"word", "reduce"}).code == kInputError);
  CHECK(run({"--help"}).code == kOk);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "maps", "--n", "3", "--samples", "30", "--seed", "9"},
           {"render", "s1 v2 s2", "--kind", "VB", "-n", "3", "--format", "svg"},
           {"braid", support::fixture_path("classical_trefoil_up.diagram")}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
