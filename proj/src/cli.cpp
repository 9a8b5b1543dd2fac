#include "symrep/cli.hpp"

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "CLI11.hpp"
#include "symrep/aut.hpp"
#include "symrep/constructions.hpp"
#include "symrep/error.hpp"
#include "symrep/graph_io.hpp"
#include "symrep/hitting.hpp"
#include "symrep/representativeness.hpp"
#include "symrep/symmetrize.hpp"

namespace symrep::cli {

namespace {

using nlohmann::json;

json report_to_json(const CheckReport& report) {
  json out;
  out["check"] = report.name;
  out["instance"] = report.instance;
  out["quantities"] = report.quantities;
  out["verdict"] = report.pass ? "pass" : "fail";
  out["witnesses"] = report.witnesses;
  return out;
}

void print_report(const CheckReport& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report_to_json(report).dump(2) << "\n";
    return;
  }
  out << "check: " << report.name << "\n";
  out << "instance: " << report.instance << "\n";
  for (const auto& [key, value] : report.quantities) out << key << ": " << value << "\n";
  for (const auto& [key, value] : report.witnesses) {
    out << key << ":";
    for (int x : value) out << " " << x;
    out << "\n";
  }
  out << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
}

std::string rational_string(const Rational& q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

struct Options {
  std::string host_file;
  std::vector<std::string> pattern_files;
  std::string action_file;
  std::string k_file, k1_file, k2_file;
  std::string mode = "vertex";
  std::string out_file;
  std::string orient = "none";
  std::string prop_case;
  std::vector<int> steps;
  int m = 0, l = 0, n = 0, len = 0, nmax = 0;
  bool symmetric = false;
  bool connected = false;
  bool directed = false;
  bool as_json = false;
};

Graph require_host(const Options& opt) {
  if (opt.host_file.empty()) fail(ErrorCode::BadParam, "--host is required");
  return load_graph_file(opt.host_file);
}

std::vector<Graph> require_patterns(const Options& opt) {
  if (opt.pattern_files.empty()) fail(ErrorCode::BadParam, "at least one --pattern is required");
  std::vector<Graph> patterns;
  for (const auto& file : opt.pattern_files) patterns.push_back(load_graph_file(file));
  return patterns;
}

int cmd_rep(const Options& opt, std::ostream& out) {
  Graph host = require_host(opt);
  RepResult rep = representativeness(host, require_patterns(opt), mode_from_string(opt.mode),
                                     opt.symmetric);
  if (opt.as_json) {
    json doc;
    doc["command"] = "rep";
    doc["mode"] = opt.mode;
    doc["value"] = rep.value;
    doc["witness"] = rep.witness;
    doc["bound_factor"] = rep.bound_factor;
    if (rep.has_symmetric) {
      doc["symmetric_value"] = rep.symmetric_value;
      doc["symmetric_witness"] = rep.symmetric_witness;
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "mode: " << opt.mode << "\n";
  out << "value: " << rep.value << "\n";
  out << "witness:";
  for (int x : rep.witness) out << " " << x;
  out << "\n";
  out << "bound_factor: " << rep.bound_factor << "\n";
  if (rep.has_symmetric) {
    out << "symmetric_value: " << rep.symmetric_value << "\n";
    out << "symmetric_witness:";
    for (int x : rep.symmetric_witness) out << " " << x;
    out << "\n";
  }
  return 0;
}

int cmd_orbits(const Options& opt, std::ostream& out) {
  if (opt.action_file.empty()) fail(ErrorCode::BadParam, "--action is required");
  ActionDocument doc = load_action_file(opt.action_file);
  OrbitPartition part = orbits(doc.action);
  if (opt.as_json) {
    json j;
    j["command"] = "orbits";
    j["points"] = doc.action.n;
    j["classes"] = part.classes;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "points: " << doc.action.n << "\n";
  out << "classes: " << part.class_count() << "\n";
  for (const auto& cls : part.classes) {
    out << "orbit:";
    for (int x : cls) out << " " << x;
    out << "\n";
  }
  return 0;
}

int cmd_aut(const Options& opt, std::ostream& out) {
  Graph host = require_host(opt);
  AutResult aut = automorphisms(host);
  if (opt.as_json) {
    json j;
    j["command"] = "aut";
    j["order"] = aut.order;
    j["order_exact"] = aut.order_exact;
    j["generators"] = json::array();
    for (const Perm& g : aut.generators) j["generators"].push_back(g.images());
    j["vertex_orbits"] = aut.vertex_orbits.classes;
    j["edge_orbits"] = aut.edge_orbits.classes;
    j["vertex_transitive"] = aut.vertex_orbits.class_count() <= 1;
    j["edge_transitive"] = aut.edge_orbits.class_count() <= 1;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "order: " << (aut.order_exact ? "" : ">= ") << aut.order << "\n";
  out << "generators: " << aut.generators.size() << "\n";
  for (const Perm& g : aut.generators) {
    out << "gen:";
    for (int x : g.images()) out << " " << x;
    out << "\n";
  }
  out << "vertex_orbits: " << aut.vertex_orbits.class_count() << "\n";
  for (const auto& cls : aut.vertex_orbits.classes) {
    out << "vertex_orbit:";
    for (int x : cls) out << " " << x;
    out << "\n";
  }
  out << "edge_orbits: " << aut.edge_orbits.class_count() << "\n";
  out << "vertex_transitive: " << (aut.vertex_orbits.class_count() <= 1 ? "yes" : "no") << "\n";
  out << "edge_transitive: " << (aut.edge_orbits.class_count() <= 1 ? "yes" : "no") << "\n";
  return 0;
}

int cmd_occ(const Options& opt, std::ostream& out) {
  Graph host = require_host(opt);
  OccurrenceFamily fam =
      enumerate_occurrences(host, require_patterns(opt), mode_from_string(opt.mode));
  if (opt.as_json) {
    json j;
    j["command"] = "occ";
    j["mode"] = opt.mode;
    j["count"] = fam.sets.size();
    j["sets"] = fam.sets.sets();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "mode: " << opt.mode << "\n";
  out << "count: " << fam.sets.size() << "\n";
  for (const auto& member : fam.sets.sets()) {
    out << "set:";
    for (int x : member) out << " " << x;
    out << "\n";
  }
  return 0;
}

int cmd_symmetrize(const Options& opt, std::ostream& out) {
  if (opt.action_file.empty()) fail(ErrorCode::BadParam, "--action is required");
  ActionDocument doc = load_action_file(opt.action_file);
  SymmetrizeResult result = symmetrize(doc.action, doc.family, doc.transversal);
  bool all_ok = true;
  for (const Rational& q : result.neumann_sums)
    if (q < 1) all_ok = false;
  if (opt.as_json) {
    json j;
    j["command"] = "symmetrize";
    j["transversal_size"] = doc.transversal.size();
    j["invariant_transversal"] = result.invariant_transversal;
    j["invariant_size"] = result.invariant_transversal.size();
    j["max_member_size"] = result.max_member_size;
    j["bound"] = result.bound;
    j["neumann_sums"] = json::array();
    for (const Rational& q : result.neumann_sums) j["neumann_sums"].push_back(rational_string(q));
    j["all_sums_at_least_one"] = all_ok;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "transversal_size: " << doc.transversal.size() << "\n";
  out << "invariant_size: " << result.invariant_transversal.size() << "\n";
  out << "invariant_transversal:";
  for (int x : result.invariant_transversal) out << " " << x;
  out << "\n";
  out << "max_member_size: " << result.max_member_size << "\n";
  out << "bound: " << result.bound << "\n";
  for (size_t i = 0; i < result.neumann_sums.size(); ++i)
    out << "neumann_sum[" << i << "]: " << rational_string(result.neumann_sums[i]) << "\n";
  out << "all_sums_at_least_one: " << (all_ok ? "yes" : "no") << "\n";
  return 0;
}

StarOrientation orient_from_string(const std::string& s) {
  if (s == "none") return StarOrientation::None;
  if (s == "out") return StarOrientation::Out;
  if (s == "in") return StarOrientation::In;
  fail(ErrorCode::BadParam, "orientation must be none|out|in, got '" + s + "'");
}

int cmd_gen(const std::string& name, const Options& opt, std::ostream& out, std::ostream& err) {
  Graph g;
  std::vector<int> marked;
  if (name == "cycle") g = cycle(opt.l);
  else if (name == "path") g = path(opt.l);
  else if (name == "star") g = star(opt.l, orient_from_string(opt.orient));
  else if (name == "complete") g = complete(opt.n);
  else if (name == "complete-bipartite") g = complete_bipartite(opt.m, opt.l, opt.directed);
  else if (name == "cube") g = cube_q3();
  else if (name == "petersen") g = petersen();
  else if (name == "chair") g = chair();
  else if (name == "circulant") g = circulant(opt.n, opt.steps);
  else if (name == "honeycomb") {
    HoneycombTorus torus = honeycomb_torus(opt.n);
    g = torus.graph;
    marked = torus.marked_edge_ids;
  } else if (name == "joined-stars") g = joined_stars(opt.l, opt.m);
  else if (name == "vt-completion") {
    if (opt.k_file.empty()) fail(ErrorCode::BadParam, "--k is required");
    g = vt_completion(load_graph_file(opt.k_file));
  } else if (name == "disjoint-copies") {
    if (opt.k_file.empty()) fail(ErrorCode::BadParam, "--k is required");
    g = disjoint_copies(load_graph_file(opt.k_file), opt.m);
  } else if (name == "chained-copies") {
    if (opt.k_file.empty()) fail(ErrorCode::BadParam, "--k is required");
    Graph k = load_graph_file(opt.k_file);
    if (opt.len <= k.vertex_count())
      err << "note: chain length " << opt.len << " is not larger than |V(K)| = "
          << k.vertex_count() << "; the copy-count equalities may not hold\n";
    g = chained_copies(k, opt.m, opt.len);
  } else {
    fail(ErrorCode::BadParam, "unknown construction '" + name + "'");
  }

  std::ostringstream text;
  text << serialize_graph(g);
  if (!marked.empty()) {
    text << "# marked edges (ids):";
    for (int id : marked) text << " " << id;
    text << "\n";
  }
  if (opt.out_file.empty()) {
    out << text.str();
  } else {
    std::ofstream file(opt.out_file);
    if (!file) fail(ErrorCode::ParseError, "cannot write '" + opt.out_file + "'");
    file << text.str();
  }
  return 0;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  Graph host = require_host(opt);
  Lemma1Class cls = lemma1_classify(host);
  if (opt.as_json) {
    json j;
    j["command"] = "classify";
    j["class"] = to_string(cls);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "class: " << to_string(cls) << "\n";
  return 0;
}

Prop1Params prop1_params(const Options& opt) {
  Prop1Params params;
  params.m = opt.m;
  params.l = opt.l;
  params.n = opt.n;
  if (opt.prop_case == "no-hanging-edges") {
    params.kase = Prop1Case::NoHangingEdges;
    if (opt.k_file.empty()) fail(ErrorCode::BadParam, "--k is required for no-hanging-edges");
    params.k = load_graph_file(opt.k_file);
  } else if (opt.prop_case == "directed-star") {
    params.kase = Prop1Case::DirectedStar;
  } else if (opt.prop_case == "path-star") {
    params.kase = Prop1Case::PathStar;
  } else if (opt.prop_case == "claw-honeycomb") {
    params.kase = Prop1Case::ClawHoneycomb;
  } else if (opt.prop_case == "joined-stars") {
    params.kase = Prop1Case::JoinedStars;
  } else {
    fail(ErrorCode::BadParam, "unknown case '" + opt.prop_case +
                                  "'; expected no-hanging-edges|directed-star|path-star|"
                                  "claw-honeycomb|joined-stars");
  }
  return params;
}

int cmd_check(const std::string& name, const Options& opt, std::ostream& out) {
  if (name == "find-d5") {
    if (opt.nmax == 0) fail(ErrorCode::BadParam, "--nmax is required");
    std::vector<Graph> found = find_lemma1_graph(opt.nmax);
    bool has_chair = false;
    for (const Graph& g : found)
      if (isomorphic(g, chair())) has_chair = true;
    CheckReport report;
    report.name = "find_d5";
    report.instance = "connected hosts on <= " + std::to_string(opt.nmax) + " vertices";
    report.quantities["nmax"] = opt.nmax;
    report.quantities["candidates"] = static_cast<long long>(found.size());
    report.quantities["contains_chair"] = has_chair ? 1 : 0;
    report.pass = has_chair;
    if (opt.as_json) {
      json j = report_to_json(report);
      j["graphs"] = json::array();
      for (const Graph& g : found) j["graphs"].push_back(serialize_graph(g));
      out << j.dump(2) << "\n";
    } else {
      print_report(report, false, out);
      for (const Graph& g : found) out << "---\n" << serialize_graph(g);
    }
    return exit_code_for(report);
  }

  CheckReport report;
  if (name == "corollary1") {
    report = check_corollary1(require_host(opt), require_patterns(opt), mode_from_string(opt.mode));
  } else if (name == "theorem1") {
    if (opt.k_file.empty()) fail(ErrorCode::BadParam, "--k is required");
    report = check_theorem1(load_graph_file(opt.k_file), opt.m, opt.connected);
  } else if (name == "disconnected-bound") {
    if (opt.k1_file.empty() || opt.k2_file.empty())
      fail(ErrorCode::BadParam, "--k1 and --k2 are required");
    report = check_disconnected_bound(load_graph_file(opt.k1_file), load_graph_file(opt.k2_file),
                                      require_host(opt));
  } else if (name == "lemma1") {
    if (opt.nmax == 0) fail(ErrorCode::BadParam, "--nmax is required");
    report = check_lemma1_exhaustive(opt.nmax);
  } else if (name == "theorem2") {
    report = check_theorem2(require_host(opt));
  } else if (name == "proposition1") {
    report = check_proposition1(prop1_params(opt));
  } else if (name == "2k2") {
    report = check_2k2_example(opt.m);
  } else {
    fail(ErrorCode::BadParam, "unknown check '" + name +
                                  "'; expected corollary1|theorem1|disconnected-bound|lemma1|"
                                  "find-d5|theorem2|proposition1|2k2");
  }
  print_report(report, opt.as_json, out);
  return exit_code_for(report);
}

int cmd_mars_demo(const Options& opt, std::ostream& out) {
  CheckReport report = mars_demo(require_host(opt));
  print_report(report, opt.as_json, out);
  return exit_code_for(report);
}

}  // namespace

int exit_code_for(const CheckReport& report) { return report.pass ? 0 : 1; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symrep: representativeness invariants and invariant transversals of finite graphs"};
  app.require_subcommand(1);

  Options opt;
  std::string gen_name, check_name;

  auto add_common = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.as_json, "JSON report"); };

  CLI::App* rep = app.add_subcommand("rep", "representativeness of patterns in a host");
  rep->add_option("--host", opt.host_file, "host graph file")->required();
  rep->add_option("--pattern", opt.pattern_files, "pattern graph file (repeatable)")->required();
  rep->add_option("--mode", opt.mode, "vertex|edge")->default_val("vertex");
  rep->add_flag("--symmetric", opt.symmetric, "also compute the invariant value");
  add_common(rep);

  CLI::App* orb = app.add_subcommand("orbits", "orbit partition of an action file");
  orb->add_option("--action", opt.action_file, "action JSON file")->required();
  add_common(orb);

  CLI::App* aut_cmd = app.add_subcommand("aut", "automorphism group of a graph");
  aut_cmd->add_option("--host", opt.host_file, "graph file")->required();
  add_common(aut_cmd);

  CLI::App* occ = app.add_subcommand("occ", "occurrence sets of patterns in a host");
  occ->add_option("--host", opt.host_file, "host graph file")->required();
  occ->add_option("--pattern", opt.pattern_files, "pattern graph file (repeatable)")->required();
  occ->add_option("--mode", opt.mode, "vertex|edge")->default_val("vertex");
  add_common(occ);

  CLI::App* symm = app.add_subcommand("symmetrize", "invariant transversal from an action file");
  symm->add_option("--action", opt.action_file, "action JSON file")->required();
  add_common(symm);

  CLI::App* gen = app.add_subcommand("gen", "generate a named graph");
  gen->add_option("name", gen_name,
                  "cycle|path|star|complete|complete-bipartite|cube|petersen|chair|circulant|"
                  "honeycomb|joined-stars|vt-completion|disjoint-copies|chained-copies")
      ->required();
  gen->add_option("--l", opt.l, "length / leaf count");
  gen->add_option("--m", opt.m, "copy count / first part size");
  gen->add_option("--n", opt.n, "vertex count / torus size");
  gen->add_option("--len", opt.len, "chain length");
  gen->add_option("--steps", opt.steps, "circulant steps");
  gen->add_option("--orient", opt.orient, "star orientation none|out|in")->default_val("none");
  gen->add_flag("--directed", opt.directed, "direct all edges across (bipartite)");
  gen->add_option("--k", opt.k_file, "base graph file");
  gen->add_option("--out", opt.out_file, "output file (default stdout)");
  add_common(gen);

  CLI::App* cls = app.add_subcommand("classify", "chair-freeness classification of a graph");
  cls->add_option("--host", opt.host_file, "graph file")->required();
  add_common(cls);

  CLI::App* chk = app.add_subcommand("check", "run an executable theorem statement");
  chk->add_option("name", check_name, "corollary1|theorem1|disconnected-bound|lemma1|find-d5|"
                                      "theorem2|proposition1|2k2")
      ->required();
  chk->add_option("--host", opt.host_file, "host graph file");
  chk->add_option("--pattern", opt.pattern_files, "pattern graph file (repeatable)");
  chk->add_option("--mode", opt.mode, "vertex|edge")->default_val("vertex");
  chk->add_option("--k", opt.k_file, "pattern graph file");
  chk->add_option("--k1", opt.k1_file, "first pattern part");
  chk->add_option("--k2", opt.k2_file, "second pattern part");
  chk->add_option("--m", opt.m, "copy count");
  chk->add_option("--l", opt.l, "star leaf count");
  chk->add_option("--n", opt.n, "torus size");
  chk->add_option("--nmax", opt.nmax, "enumeration budget");
  chk->add_option("--case", opt.prop_case, "proposition1 case id");
  chk->add_flag("--connected", opt.connected, "use the chained (connected) construction");
  add_common(chk);

  CLI::App* mars = app.add_subcommand("mars-demo", "forbidden 5-subset demo on a digraph");
  mars->add_option("--host", opt.host_file, "directed host graph file")->required();
  add_common(mars);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (rep->parsed()) return cmd_rep(opt, out);
    if (orb->parsed()) return cmd_orbits(opt, out);
    if (aut_cmd->parsed()) return cmd_aut(opt, out);
    if (occ->parsed()) return cmd_occ(opt, out);
    if (symm->parsed()) return cmd_symmetrize(opt, out);
    if (gen->parsed()) return cmd_gen(gen_name, opt, out, err);
    if (cls->parsed()) return cmd_classify(opt, out);
    if (chk->parsed()) return cmd_check(check_name, opt, out);
    if (mars->parsed()) return cmd_mars_demo(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace symrep::cli
