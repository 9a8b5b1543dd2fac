#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symrep/graph.hpp"
#include "symrep/set_family.hpp"

namespace symrep {

enum class Mode { Vertex, Edge };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// All subgraph occurrences of a pattern list in a host, collapsed to image
/// point sets: vertex ids in vertex mode, edge ids in edge mode. Two
/// embeddings (or two patterns) with the same image set yield one member.
struct OccurrenceFamily {
  Mode mode = Mode::Vertex;
  Graph host;
  SetFamily sets;
  std::vector<std::pair<int, int>> pattern_sizes;  // (vertices, edges) per input pattern
};

/// Enumerates subgraph monomorphisms (injective vertex maps carrying every
/// pattern edge to a host edge, direction-respecting for directed kinds;
/// images need not be induced) of each pattern into the host.
///
/// Edge mode records the image edge set only; patterns with isolated vertices
/// still require those vertices to embed injectively.
OccurrenceFamily enumerate_occurrences(const Graph& host, const std::vector<Graph>& patterns,
                                       Mode mode);

/// Existence-only variant: true iff at least one monomorphism exists.
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// Isomorphism of simple graphs: equal kind and counts plus a monomorphism
/// (which is then forced to be edge-onto).
bool isomorphic(const Graph& a, const Graph& b);

/// All `subset_size`-subsets of host vertices whose induced subgraph satisfies
/// the named predicate. Built-in predicate "mars": directed host, the subset
/// is forbidden iff fewer than 2 of its vertices have outdegree >= 3 inside
/// the induced subdigraph (loops ignored).
SetFamily predicate_family(const Graph& host, int subset_size, const std::string& predicate);

}  // namespace symrep
