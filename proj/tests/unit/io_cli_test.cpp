#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "symrep/cli.hpp"
#include "symrep/constructions.hpp"
#include "symrep/graph_io.hpp"

using namespace symrep;
namespace fs = std::filesystem;

namespace {

// scratch directory with a handful of fixture files
struct Workspace {
  fs::path dir;

  Workspace() {
    dir = fs::temp_directory_path() / "symrep_cli_test";
    fs::create_directories(dir);
    save_graph_file(complete(4), (dir / "k4.graph").string());
    save_graph_file(cycle(3), (dir / "c3.graph").string());
    save_graph_file(petersen(), (dir / "petersen.graph").string());
    save_graph_file(chair(), (dir / "chair.graph").string());
    save_graph_file(make_graph(kDirected, 6, {}), (dir / "edgeless6.graph").string());
    std::ofstream z6(dir / "z6.json");
    z6 << R"({"points": 6,
              "generators": [[1, 2, 3, 4, 5, 0]],
              "family": [[0,1,2],[1,2,3],[2,3,4],[3,4,5],[4,5,0],[5,0,1]],
              "transversal": [0, 3]})";
  }

  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_SUITE("io_cli") {
  TEST_CASE("graph files round-trip canonically") {
    std::mt19937 rng(89);
    for (int iter = 0; iter < 30; ++iter) {
      GraphKind kind{iter % 2 == 0, iter % 4 < 2};
      Graph g = oracles::random_graph(rng, 8, 0.4, kind);
      Graph reparsed = parse_graph(serialize_graph(g));
      CHECK(reparsed == g);
      CHECK(serialize_graph(reparsed) == serialize_graph(g));
    }
  }

  TEST_CASE("comments and blank lines are ignored") {
    Graph g = parse_graph("# a triangle\n\ngraph undirected loops=0 n=3\ne 2 1\n# another\ne 0 1\ne 0 2\n");
    CHECK(g == cycle(3));
  }

  TEST_CASE("parse errors name the offending line") {
    auto code_and_message = [](const std::string& text) {
      try {
        parse_graph(text);
      } catch (const Error& e) {
        return std::make_pair(e.code(), std::string(e.what()));
      }
      return std::make_pair(ErrorCode::ParseError, std::string("no error"));
    };

    auto [c1, m1] = code_and_message("graph undirected loops=0 n=2\ne 0 5\n");
    CHECK(c1 == ErrorCode::ParseError);
    CHECK(m1.find("line 2") != std::string::npos);

    CHECK(code_and_message("graph sideways loops=0 n=2\n").first == ErrorCode::ParseError);
    CHECK(code_and_message("e 0 1\n").first == ErrorCode::ParseError);
    CHECK(code_and_message("graph undirected loops=0 n=2\nedge 0 1\n").first ==
          ErrorCode::ParseError);
    CHECK(code_and_message("graph undirected loops=0 n=2\ne 0 0\n").first == ErrorCode::ParseError);
    CHECK(code_and_message("").first == ErrorCode::ParseError);
  }

  TEST_CASE("action documents parse and validate") {
    ActionDocument doc = parse_action_json(
        R"({"points": 3, "generators": [[1, 0, 2]], "family": [[0], [1]], "transversal": [0, 1]})");
    CHECK(doc.action.n == 3);
    CHECK(doc.family.size() == 2);
    CHECK(doc.transversal == std::vector<int>{0, 1});

    ActionDocument reparsed = parse_action_json(serialize_action_json(doc));
    CHECK(reparsed.action.generators == doc.action.generators);
    CHECK(reparsed.family.sets() == doc.family.sets());

    CHECK(oracles::error_code_of([] { parse_action_json("{"); }) == ErrorCode::ParseError);
    CHECK(oracles::error_code_of([] {
            parse_action_json(R"({"points": 2, "generators": [[0, 0]]})");
          }) == ErrorCode::ParseError);
    CHECK(oracles::error_code_of([] {
            parse_action_json(R"({"points": 2, "family": [[5]]})");
          }) == ErrorCode::ParseError);
    CHECK(oracles::error_code_of([] { parse_action_json(R"({"generators": []})"); }) ==
          ErrorCode::ParseError);
  }

  TEST_CASE("rep subcommand reports both values") {
    Workspace ws;
    std::string out;
    int code = run_cli({"rep", "--host", ws.file("k4.graph"), "--pattern", ws.file("c3.graph"),
                        "--mode", "vertex", "--symmetric"},
                       &out);
    CHECK(code == 0);
    CHECK(out.find("value: 2") != std::string::npos);
    CHECK(out.find("symmetric_value: 4") != std::string::npos);

    code = run_cli({"rep", "--host", ws.file("k4.graph"), "--pattern", ws.file("c3.graph"),
                    "--json", "--symmetric"},
                   &out);
    CHECK(code == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["value"] == 2);
    CHECK(doc["symmetric_value"] == 4);
  }

  TEST_CASE("aut subcommand reports the order") {
    Workspace ws;
    std::string out;
    CHECK(run_cli({"aut", "--host", ws.file("petersen.graph")}, &out) == 0);
    CHECK(out.find("order: 120") != std::string::npos);
    CHECK(out.find("vertex_transitive: yes") != std::string::npos);
  }

  TEST_CASE("symmetrize subcommand runs the worked example") {
    Workspace ws;
    std::string out;
    CHECK(run_cli({"symmetrize", "--action", ws.file("z6.json"), "--json"}, &out) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["invariant_size"] == 6);
    CHECK(doc["bound"] == 6);
    CHECK(doc["all_sums_at_least_one"] == true);
    REQUIRE(doc["neumann_sums"].size() == 6);
    for (const auto& sum : doc["neumann_sums"]) CHECK(sum == "1");
  }

  TEST_CASE("orbits subcommand lists classes") {
    Workspace ws;
    std::string out;
    CHECK(run_cli({"orbits", "--action", ws.file("z6.json")}, &out) == 0);
    CHECK(out.find("classes: 1") != std::string::npos);
  }

  TEST_CASE("check subcommand obeys the exit contract") {
    Workspace ws;
    std::string out;
    CHECK(run_cli({"check", "theorem1", "--k", ws.file("c3.graph"), "--m", "3"}, &out) == 0);
    CHECK(out.find("verdict: pass") != std::string::npos);

    CHECK(run_cli({"check", "2k2", "--m", "3", "--json"}, &out) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["quantities"]["value"] == 3);

    // exit 1 is reserved for a computed fail verdict
    CheckReport failing;
    failing.pass = false;
    CHECK(cli::exit_code_for(failing) == 1);
    CheckReport passing;
    passing.pass = true;
    CHECK(cli::exit_code_for(passing) == 0);
  }

  TEST_CASE("gen subcommand emits parseable graphs") {
    std::string out;
    CHECK(run_cli({"gen", "cycle", "--l", "6"}, &out) == 0);
    CHECK(parse_graph(out) == cycle(6));

    CHECK(run_cli({"gen", "honeycomb", "--n", "2"}, &out) == 0);
    CHECK(parse_graph(out).vertex_count() == 8);
    CHECK(out.find("# marked edges") != std::string::npos);

    Workspace ws;
    CHECK(run_cli({"gen", "disjoint-copies", "--k", ws.file("c3.graph"), "--m", "3"}, &out) == 0);
    CHECK(parse_graph(out) == disjoint_copies(cycle(3), 3));
  }

  TEST_CASE("classify and mars-demo subcommands") {
    Workspace ws;
    std::string out;
    CHECK(run_cli({"classify", "--host", ws.file("chair.graph")}, &out) == 0);
    CHECK(out.find("class: ContainsD5") != std::string::npos);

    CHECK(run_cli({"mars-demo", "--host", ws.file("edgeless6.graph"), "--json"}, &out) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["quantities"]["invariant_size"] == 6);
  }

  TEST_CASE("usage and input errors exit with 2") {
    Workspace ws;
    std::string out, err;
    CHECK(run_cli({"rep", "--host", "missing.graph", "--pattern", ws.file("c3.graph")}, &out,
                  &err) == 2);
    CHECK(err.find("error") != std::string::npos);
    CHECK(run_cli({"check", "unknown-check"}, &out, &err) == 2);
    CHECK(run_cli({"nonsense"}, &out, &err) == 2);
    CHECK(run_cli({"rep"}, &out, &err) == 2);
    CHECK(run_cli({"gen", "cycle", "--l", "2"}, &out, &err) == 2);
    CHECK(run_cli({"check", "theorem2", "--host", ws.file("c3.graph")}, &out, &err) == 2);
  }

  TEST_CASE("remaining check wirings") {
    Workspace ws;
    save_graph_file(cycle(6), ws.file("c6.graph"));
    save_graph_file(path(2), ws.file("p3.graph"));
    save_graph_file(cycle(4), ws.file("c4.graph"));

    std::string out;
    CHECK(run_cli({"check", "corollary1", "--host", ws.file("c6.graph"), "--pattern",
                   ws.file("p3.graph"), "--mode", "edge", "--json"},
                  &out) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["quantities"]["value"] == 3);
    CHECK(doc["quantities"]["symmetric_value"] == 6);

    CHECK(run_cli({"check", "disconnected-bound", "--k1", ws.file("c3.graph"), "--k2",
                   ws.file("c3.graph"), "--host", ws.file("petersen.graph")},
                  &out) == 0);

    CHECK(run_cli({"check", "proposition1", "--case", "no-hanging-edges", "--k",
                   ws.file("c4.graph"), "--m", "2", "--json"},
                  &out) == 0);
    doc = nlohmann::json::parse(out);
    CHECK(doc["quantities"]["value"] == 2);
    CHECK(doc["quantities"]["symmetric_value"] == 8);

    CHECK(run_cli({"check", "theorem2", "--host", ws.file("petersen.graph")}, &out) == 0);
  }

  TEST_CASE("occ subcommand lists occurrence sets") {
    Workspace ws;
    std::string out;
    CHECK(run_cli({"occ", "--host", ws.file("k4.graph"), "--pattern", ws.file("c3.graph"),
                   "--mode", "vertex"},
                  &out) == 0);
    CHECK(out.find("count: 4") != std::string::npos);
  }

  TEST_CASE("symmetric values need the automorphism cap only when requested") {
    // 69 vertices: over the default cap
    fs::path big = fs::temp_directory_path() / "symrep_cli_test" / "triangles23.graph";
    fs::create_directories(big.parent_path());
    save_graph_file(disjoint_copies(cycle(3), 23), big.string());
    fs::path c3 = fs::temp_directory_path() / "symrep_cli_test" / "c3_pattern.graph";
    save_graph_file(cycle(3), c3.string());

    std::string out, err;
    CHECK(run_cli({"rep", "--host", big.string(), "--pattern", c3.string(), "--mode", "edge"},
                  &out, &err) == 0);
    CHECK(out.find("value: 23") != std::string::npos);
    CHECK(run_cli({"rep", "--host", big.string(), "--pattern", c3.string(), "--mode", "edge",
                   "--symmetric"},
                  &out, &err) == 2);
    CHECK(err.find("TooLarge") != std::string::npos);
  }

  TEST_CASE("json reports are stable under re-run") {
    Workspace ws;
    std::string first, second;
    std::vector<std::string> args = {"rep",    "--host",   ws.file("k4.graph"), "--pattern",
                                     ws.file("c3.graph"),  "--symmetric",       "--json"};
    CHECK(run_cli(args, &first) == 0);
    CHECK(run_cli(args, &second) == 0);
    CHECK(first == second);

    std::vector<std::string> check_args = {"check", "2k2", "--m", "3", "--json"};
    CHECK(run_cli(check_args, &first) == 0);
    CHECK(run_cli(check_args, &second) == 0);
    CHECK(first == second);
  }

  TEST_CASE("find-d5 check reports the recovered graphs") {
    std::string out;
    CHECK(run_cli({"check", "find-d5", "--nmax", "5", "--json"}, &out) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["quantities"]["contains_chair"] == 1);
    CHECK(doc["graphs"].size() == doc["quantities"]["candidates"]);
  }
}
