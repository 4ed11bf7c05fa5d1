#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "brauer/cli.hpp"
#include "brauer/graph_io.hpp"
#include "brauer/moves.hpp"
#include "fixtures.hpp"

using namespace brauer;

namespace {

std::string data(const std::string& name) { return std::string(BRAUER_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("brauer_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("example files parse to the fixtures") {
  const GraphFile f1 = parse_graph(slurp(data("ex1.bg")));
  CHECK(f1.graph == fixtures::ex1());
  REQUIRE(f1.grading);
  CHECK(*f1.grading == fixtures::ex1_grading(f1.graph));

  const GraphFile f2 = parse_graph(slurp(data("ex2.bg")));
  CHECK(f2.graph == fixtures::ex2());
  CHECK_FALSE(f2.grading);
}

TEST_CASE("a multiplicity line covers the whole σ-orbit") {
  const auto f = parse_graph("halfedges: a b c d\npairing: (a b) (c d)\norientation: (a c)\nmultiplicity:\n  c = 3\n");
  CHECK(f.graph.multiplicity(f.graph.index("a")) == 3);
  CHECK(f.graph.multiplicity(f.graph.index("b")) == 1);
  CHECK_THROWS_AS(parse_graph("halfedges: a b\npairing: (a b)\norientation: (a b)\nmultiplicity:\n a = 2\n b = 3\n"),
                  ParseError);
}

TEST_CASE("empty input is the empty graph") {
  const auto f = parse_graph("# nothing\n");
  CHECK(f.graph.size() == 0);
  CHECK(validate(f.graph).empty());
}

TEST_CASE("parse errors carry line and column") {
  auto position = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(position("halfedges: a b\npairing: (a c)\n") == std::pair{2, 13});
  CHECK(position("halfedges: a b\nfaces: (a b)\n") == std::pair{2, 1});
  CHECK(position("halfedges: a b\npairing: (a b\n") == std::pair{2, 13});
  CHECK(position("halfedges: a a\n") == std::pair{1, 14});
  CHECK(position("halfedges: a b\nmultiplicity:\n  a = x\n") == std::pair{3, 7});
  CHECK(position("halfedges: a b\npairing: (a b) (b)\n") == std::pair{2, 17});
}

TEST_CASE("emit and parse round-trip on random graphs") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    RandomGraphOptions o;
    o.allow_skew = seed % 2 == 0;
    o.halfedges = 2 + 2 * static_cast<int>(seed % 5) + (o.allow_skew ? static_cast<int>(seed % 4 / 2) : 0);
    o.max_multiplicity = 3;
    const BrauerGraph g = gen_random(seed, o);
    const GraphFile file{g, random_grading(g, seed), {}};
    const std::string text = emit_graph(file);
    const GraphFile back = parse_graph(text);
    CHECK(back.graph == g);
    CHECK(back.grading == file.grading);
    CHECK(emit_graph(back) == text);
  }
}

TEST_CASE("edge lists accept aliases and edge labels") {
  auto f = parse_graph(slurp(data("ex1.bg")) + "edges:\n  left = 1+\n");
  const auto s = parse_edge_list(f, "left, 2");
  CHECK(s == fixtures::named(f.graph, {"1+", "1-", "2+", "2-"}));
  CHECK_THROWS_AS(parse_edge_list(f, "7"), Error);
}

TEST_CASE("cli validate and invariants") {
  auto r = run({"validate", data("ex1.bg")});
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");

  const auto bad = temp_file("bad.bg", "halfedges: a b c\npairing: (a b c)\n");
  r = run({"validate", bad});
  CHECK(r.code == 1);
  CHECK(r.out != "valid\n");
  r = run({"dim", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("invalid graph") != std::string::npos);

  r = run({"invariants", data("ex1.bg")});
  CHECK(r.out.find("faces: 2\nperimeters: 2 6\n") != std::string::npos);
  r = run({"--json", "invariants", data("ex2.bg")});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["edges"] == 5);
  CHECK(j["cross_vertices"] == 2);
  CHECK(j["faces"].is_null());
}

TEST_CASE("cli algebra commands") {
  CHECK(run({"dim", data("ex1.bg")}).out == "dim: 27\nvertex formula: 27\n");
  CHECK(run({"dim", data("ex2.bg")}).out == "dim: 63\ncovering formula: 63\n");
  const auto j = nlohmann::json::parse(run({"--json", "cartan", data("ex1.bg")}).out);
  CHECK(j["cartan"] == nlohmann::json::parse("[[3,1,1,1],[1,3,3,1],[1,3,3,1],[1,1,1,2]]"));
  const auto rel = run({"relations", data("ex1.bg")}).out;
  CHECK(rel.find("[I] a(1+) a(1+) - a(2-) a(3-) a(4-) a(1-)\n") != std::string::npos);
  const auto q = run({"quiver", data("ex2.bg"), "--dot", "-"}).out;
  CHECK(q.rfind("digraph", 0) == 0);
  CHECK(q.find("[label=\"2_0\"]") != std::string::npos);
}

TEST_CASE("cli move keeps the file format") {
  const auto r = run({"move", data("ex1.bg"), "--edges", "1,2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("orientation: (1- 4+ 2-)(2+ 4- 3-)\n") != std::string::npos);
  const GraphFile moved = parse_graph(r.out);
  REQUIRE(moved.grading);
  const GradedGraph expected = move_set(fixtures::ex1_graded(), fixtures::named(fixtures::ex1(), {"1+", "1-", "2+", "2-"}));
  CHECK(moved.graph == expected.graph);
  CHECK(*moved.grading == expected.grading);
  CHECK(run({"move", data("ex1.bg"), "--edges", "1,2"}).out == r.out);

  const auto out = std::filesystem::temp_directory_path() / "brauer_test_moved.bg";
  CHECK(run({"move", data("ex1.bg"), "--edges", "1,2", "-o", out.string()}).code == 0);
  CHECK(slurp(out.string()) == r.out);
}

TEST_CASE("cli covering, commutation and mutation") {
  const auto c = parse_graph(run({"cover", data("ex2.bg")}).out);
  CHECK(c.graph.size() == 16);
  CHECK_FALSE(c.graph.is_skew());

  auto r = run({"check-commute", data("ex1.bg"), "--edges", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "commutes: true\n");

  r = run({"mutate", data("ex1.bg"), "--edges", "1,2", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim End(T): 22\n") != std::string::npos);
  CHECK(r.out.find("verified: true\n") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"--json", "mutate", data("ex2.bg"), "--edges", "4", "--verify"}).out);
  CHECK(j["ok"] == true);
  CHECK(j["summands"].size() == 7);
}

TEST_CASE("cli cut") {
  auto text = slurp(data("ex2.bg"));
  text = text.substr(0, text.find("multiplicity:"));
  const auto r = run({"--json", "cut", temp_file("ex2u.bg", text), "--delta", "1-,4+"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim_cut"] == 18);
  CHECK(j["dim_trivial_extension"] == 36);
  CHECK(j["dim_algebra"] == 36);
  CHECK(j["covering_cut_gentle"] == true);
}

TEST_CASE("cli errors") {
  auto r = run({"--json", "dim", temp_file("typo.bg", "halfedges: a b\npairing: (a c)\n")});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.err);
  CHECK(j["line"] == 2);
  CHECK(j["column"] == 13);

  r = run({"dim", "/nonexistent/file.bg"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot open") != std::string::npos);
  CHECK(run({"move", data("ex1.bg")}).code == 2);
  CHECK(run({"--json", "move", data("ex1.bg"), "--edges", "9"}).code == 2);
  CHECK(run({}).code == 2);
}
