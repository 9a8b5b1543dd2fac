#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symrep/graph.hpp"
#include "symrep/perm.hpp"
#include "symrep/set_family.hpp"

namespace symrep {

/// Text graph format:
///   graph <directed|undirected> loops=<0|1> n=<count>
///   e <u> <v>          (one line per edge)
/// Lines starting with '#' and blank lines are ignored. Serialization is
/// canonical (sorted edge lines, undirected pairs as min-max), so
/// parse ∘ serialize ∘ parse = parse.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

/// JSON action document: {"points": n, "generators": [[...]...],
/// "family": [[...]...], "transversal": [...]}. Generators must be bijections
/// of 0..points-1; all indices must be in range.
struct ActionDocument {
  PermAction action;
  SetFamily family;
  std::vector<int> transversal;
};

ActionDocument parse_action_json(const std::string& text);
std::string serialize_action_json(const ActionDocument& doc);
ActionDocument load_action_file(const std::string& path);

}  // namespace symrep
