#include "symrep/graph_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "symrep/error.hpp"

namespace symrep {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  GraphKind kind;
  int n = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    std::string word;
    tokens >> word;
    if (!have_header) {
      if (word != "graph") parse_fail(line_no, "expected header 'graph <kind> loops=<0|1> n=<count>'");
      std::string kind_word, loops_word, n_word;
      tokens >> kind_word >> loops_word >> n_word;
      if (kind_word == "directed") kind.directed = true;
      else if (kind_word == "undirected") kind.directed = false;
      else parse_fail(line_no, "kind must be 'directed' or 'undirected', got '" + kind_word + "'");
      if (loops_word == "loops=0") kind.loops_allowed = false;
      else if (loops_word == "loops=1") kind.loops_allowed = true;
      else parse_fail(line_no, "expected loops=0 or loops=1, got '" + loops_word + "'");
      if (n_word.rfind("n=", 0) != 0) parse_fail(line_no, "expected n=<count>, got '" + n_word + "'");
      try {
        n = std::stoi(n_word.substr(2));
      } catch (const std::exception&) {
        parse_fail(line_no, "bad vertex count '" + n_word + "'");
      }
      if (n < 0) parse_fail(line_no, "negative vertex count");
      have_header = true;
      continue;
    }
    if (word != "e") parse_fail(line_no, "expected edge line 'e <u> <v>', got '" + word + "'");
    long long u, v;
    if (!(tokens >> u >> v)) parse_fail(line_no, "edge line needs two endpoints");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(line_no, "endpoint outside 0.." + std::to_string(n - 1));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!have_header) fail(ErrorCode::ParseError, "missing 'graph' header line");
  try {
    return Graph(kind, n, edges);
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.kind().directed ? "directed" : "undirected") << " loops="
      << (g.kind().loops_allowed ? 1 : 0) << " n=" << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.first << " " << e.second << "\n";
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_graph(in);
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << serialize_graph(g);
}

ActionDocument parse_action_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::ParseError, "top level must be an object");
  if (!doc.contains("points") || !doc["points"].is_number_integer())
    fail(ErrorCode::ParseError, "field 'points' (integer) is required");
  int points = doc["points"].get<int>();

  auto read_int_arrays = [&](const char* field) {
    std::vector<std::vector<int>> arrays;
    if (!doc.contains(field)) return arrays;
    if (!doc[field].is_array()) fail(ErrorCode::ParseError, std::string("field '") + field + "' must be an array");
    for (const auto& item : doc[field]) {
      if (!item.is_array()) fail(ErrorCode::ParseError, std::string("members of '") + field + "' must be arrays");
      std::vector<int> values;
      for (const auto& x : item) {
        if (!x.is_number_integer())
          fail(ErrorCode::ParseError, std::string("members of '") + field + "' must hold integers");
        values.push_back(x.get<int>());
      }
      arrays.push_back(std::move(values));
    }
    return arrays;
  };

  ActionDocument result;
  std::vector<Perm> gens;
  for (auto& images : read_int_arrays("generators")) {
    if (static_cast<int>(images.size()) != points)
      fail(ErrorCode::ParseError, "generator length does not match 'points'");
    try {
      gens.push_back(Perm(std::move(images)));
    } catch (const Error& e) {
      fail(ErrorCode::ParseError, e.what());
    }
  }
  result.action = PermAction(points, std::move(gens));

  auto family_sets = read_int_arrays("family");
  for (const auto& member : family_sets)
    for (int x : member)
      if (x < 0 || x >= points) fail(ErrorCode::ParseError, "family index outside 0..points-1");
  try {
    result.family = SetFamily(std::move(family_sets));
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }

  if (doc.contains("transversal")) {
    if (!doc["transversal"].is_array()) fail(ErrorCode::ParseError, "field 'transversal' must be an array");
    for (const auto& x : doc["transversal"]) {
      if (!x.is_number_integer()) fail(ErrorCode::ParseError, "transversal must hold integers");
      int v = x.get<int>();
      if (v < 0 || v >= points) fail(ErrorCode::ParseError, "transversal index outside 0..points-1");
      result.transversal.push_back(v);
    }
  }
  return result;
}

std::string serialize_action_json(const ActionDocument& doc) {
  json out;
  out["points"] = doc.action.n;
  out["generators"] = json::array();
  for (const Perm& g : doc.action.generators) out["generators"].push_back(g.images());
  out["family"] = doc.family.sets();
  out["transversal"] = doc.transversal;
  return out.dump(2) + "\n";
}

ActionDocument load_action_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_action_json(buffer.str());
}

}  // namespace symrep
