#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quiverlab/cli.hpp"
#include "quiverlab/io.hpp"
#include "support/fixtures.hpp"

using namespace quiverlab;

namespace {

const std::filesystem::path kData = QUIVERLAB_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "quiverlab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("quiverlab_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("validate") {
  const auto ok = run({"validate", data("phi.qm")});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "valid: 3 edge(s) checked, both squares commute\n");

  const auto bad = run({"validate", data("broken.qm")});
  CHECK(bad.code == kExitLawFailure);
  CHECK(bad.out.rfind("invalid: ", 0) == 0);
  CHECK(bad.out.find("edge 'e'") != std::string::npos);
  CHECK(bad.out.find("target") != std::string::npos);

  CHECK(run({"validate", data("missing.qm")}).code == kExitUsage);
  CHECK(run({"validate"}).code == kExitUsage);
}

TEST_CASE("construct") {
  const auto k = run({"construct", "complete", "0", "1"});
  CHECK(k.code == kExitOk);
  CHECK(k.out == "quiver K\nvertex 0\nvertex 1\nedge (0,0) 0 0\nedge (0,1) 0 1\nedge (1,0) 1 0\nedge (1,1) 1 1\n");
  CHECK(parse_quiver(k.out) == complete_quiver(FiniteSet{"0", "1"}));

  CHECK(run({"construct", "bouquet", "e", "f", "g", "h"}).out ==
        "quiver B\nvertex 1\nedge e 1 1\nedge f 1 1\nedge g 1 1\nedge h 1 1\n");
  CHECK(run({"construct", "empty", "b", "a"}).out == "quiver I\nvertex a\nvertex b\n");
  CHECK(run({"construct", "matching", "a"}).out == "quiver M\nvertex (0,a)\nvertex (1,a)\nedge a (0,a) (1,a)\n");
  CHECK(run({"construct", "empty"}).out == "quiver I\n");
  CHECK(run({"construct", "star", "a"}).code == kExitUsage);
  CHECK(run({"construct", "empty", "a", "a"}).code == kExitUsage);
  CHECK(run({"construct", "empty", "a,b"}).code == kExitUsage);
}

TEST_CASE("hom") {
  const auto count = run({"hom", "--count", data("gI2.qv"), data("gG.qv")});
  CHECK(count.code == kExitOk);
  CHECK(count.out == "4\n");
  CHECK(run({"hom", data("gG.qv"), data("gH.qv"), "--count"}).out == "8\n");

  const auto listing = run({"hom", data("gG.qv"), data("gH.qv")});
  CHECK(listing.code == kExitOk);
  CHECK(listing.out.rfind("# morphism 1\nvmap 0 -> 2\nvmap 1 -> 2\nemap e -> h\nemap f -> h\nemap g -> h\n", 0) == 0);
  CHECK(listing.out.find("# 8 morphism(s)\n") != std::string::npos);

  const auto big = write_temp("k4.qv", run({"construct", "complete", "a", "b", "c", "d"}).out);
  const auto capped = run({"hom", "--count", big.string(), big.string()});
  CHECK(capped.code == kExitCapExceeded);
  CHECK(capped.err.find("error: ") == 0);
  std::filesystem::remove(big);

  const auto bad = write_temp("bad.qv", "vertex 0\nedge e 0\n");
  const auto parse = run({"hom", bad.string(), data("gG.qv")});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find(":2:9:") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("factorize") {
  const auto rv = run({"factorize", "reflect-v", data("gG.qv"), data("vertices_ab.qf")});
  CHECK(rv.code == kExitOk);
  CHECK(rv.out ==
        "# I-|V factorization of {a->0,b->1}\n"
        "dom {\n  vertex a\n  vertex b\n}\n"
        "cod {\n  vertex 0\n  vertex 1\n  edge e 0 0\n  edge f 0 1\n  edge g 0 1\n}\n"
        "vmap a -> 0\nvmap b -> 1\n"
        "# triangle: holds\n"
        "# factoring morphisms: 1 of 4\n");

  const auto re = run({"factorize", "reflect-e", data("gG.qv"), data("edge_x.qf")});
  CHECK(re.code == kExitOk);
  CHECK(re.out.find("vmap (0,x) -> 0\nvmap (1,x) -> 1\nemap x -> f\n") != std::string::npos);
  CHECK(re.out.find("# factoring morphisms: 1 of 3\n") != std::string::npos);

  const auto cv = run({"factorize", "coreflect-v", data("gG.qv"), data("vertex_id.qf")});
  CHECK(cv.code == kExitOk);
  CHECK(cv.out.find("emap e -> (0,0)\nemap f -> (0,1)\nemap g -> (0,1)\n") != std::string::npos);
  CHECK(cv.out.find("# factoring morphisms: 1 of 4\n") != std::string::npos);

  const auto ce = run({"factorize", "coreflect-e", data("gG.qv"), data("edges_hi.qf")});
  CHECK(ce.code == kExitOk);
  CHECK(ce.out.find("vmap 0 -> 1\nvmap 1 -> 1\nemap e -> h\nemap f -> i\nemap g -> i\n") != std::string::npos);
  CHECK(ce.out.find("# factoring morphisms: 1 of 8\n") != std::string::npos);

  CHECK(run({"factorize", "reflect-x", data("gG.qv"), data("edge_x.qf")}).code == kExitUsage);
  // x -> f does not land in V(G).
  CHECK(run({"factorize", "reflect-v", data("gG.qv"), data("edge_x.qf")}).code == kExitUsage);
}

TEST_CASE("laws") {
  const auto r = run({"laws", "--max-set", "1", "--max-v", "1", "--max-e", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("# catalogue: 2 set(s) up to size 1, 3 quiver(s) up to 1 vertices and 1 edges\n", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS  I-|V  retraction") != std::string::npos);
  CHECK(r.out.find("summary: 48 law(s), ") != std::string::npos);
  CHECK(r.out.find(", 0 failed\n") != std::string::npos);
  CHECK(run({"laws", "--max-v", "two"}).code == kExitUsage);
}

TEST_CASE("law report formatting") {
  LawReport report;
  report.results.push_back({"Quiv", "identity", 10, 0, {}});
  report.results.push_back({"E-|B", "uniqueness", 4, 2, {{"a", "1", "2"}, {"b", "3", "4"}}});
  CHECK(format_law_report(report) ==
        "PASS  Quiv  identity              10 instance(s)\n"
        "FAIL  E-|B  uniqueness            4 instance(s), 2 failed\n"
        "      at a: 1 != 2\n"
        "summary: 2 law(s), 14 instance(s), 1 failed\n");
  CHECK(format_law_report(report, true).find("      at b: 3 != 4\n") != std::string::npos);
}

TEST_CASE("export-dot") {
  const auto r = run({"export-dot", data("gG.qv")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == export_dot(fixtures::worked_g(), "G"));
  CHECK(run({"export-dot", data("gI2.qv")}).out.rfind("digraph \"I2\" {\n", 0) == 0);
}

TEST_CASE("usage") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("factorize") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"hom", data("gG.qv"), data("gH.qv")};
  CHECK(run(args).out == run(args).out);
}
