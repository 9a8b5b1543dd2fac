#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "symrep/error.hpp"

namespace symrep {

/// One of the four representable graph senses. Multigraphs and mixed graphs
/// are not representable.
struct GraphKind {
  bool directed = false;
  bool loops_allowed = false;

  friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

inline constexpr GraphKind kUndirected{false, false};
inline constexpr GraphKind kUndirectedLoops{false, true};
inline constexpr GraphKind kDirected{true, false};
inline constexpr GraphKind kDirectedLoops{true, true};

using Edge = std::pair<int, int>;

/// Finite simple graph with dense vertex ids 0..n-1.
///
/// Edges are stored deduplicated and sorted; undirected pairs are kept in
/// (min, max) order. Edge ids are positions in that sorted order, so they are
/// stable and reproducible for a given (kind, n, edge set). Immutable after
/// construction.
class Graph {
 public:
  Graph() = default;
  Graph(GraphKind kind, int n, const std::vector<Edge>& edges);

  GraphKind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

  /// Directed kinds: true iff the arc u->v exists. Undirected: order-insensitive.
  bool has_edge(int u, int v) const;
  /// Id of the edge (u,v), or -1 when absent.
  int edge_id(int u, int v) const;

  /// Undirected: all neighbors (a loop contributes the vertex itself once).
  /// Directed: out-neighbors.
  const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
  /// Directed: in-neighbors. Undirected: same list as out_neighbors.
  const std::vector<int>& in_neighbors(int v) const {
    return kind_.directed ? in_[static_cast<size_t>(v)] : out_[static_cast<size_t>(v)];
  }

  int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }
  /// Undirected degree / total arc degree for directed kinds.
  int degree(int v) const { return kind_.directed ? out_degree(v) + in_degree(v) : out_degree(v); }

  bool has_loop(int v) const { return has_edge(v, v); }
  bool has_any_loop() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  GraphKind kind_;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;  // directed kinds only
};

/// Builds a graph, validating endpoints and the loop policy. Duplicate edges
/// in the input merge silently (set semantics); undirected pairs are
/// canonicalized to (min, max).
Graph make_graph(GraphKind kind, int n, const std::vector<Edge>& edges);

/// Subgraph induced on `s`, relabeled by the order-preserving map
/// (i-th smallest member of s -> i). Duplicate entries of `s` collapse.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// Connected components (weak connectivity for directed kinds), sorted by
/// smallest member; each class ascending.
std::vector<std::vector<int>> components(const Graph& g);

/// Disjoint union: vertices of `b` shifted past those of `a`. Kinds must match.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace symrep
