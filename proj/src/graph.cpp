#include "symrep/graph.hpp"

#include <algorithm>
#include <numeric>

#include "symrep/error.hpp"

namespace symrep {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LoopForbidden: return "LoopForbidden";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotTransversal: return "NotTransversal";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::EmptyMember: return "EmptyMember";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Graph::Graph(GraphKind kind, int n, const std::vector<Edge>& edges) : kind_(kind), n_(n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
      fail(ErrorCode::OutOfRange, "edge endpoint (" + std::to_string(e.first) + "," +
                                      std::to_string(e.second) + ") outside 0.." +
                                      std::to_string(n - 1));
    if (e.first == e.second && !kind.loops_allowed)
      fail(ErrorCode::LoopForbidden, "loop at vertex " + std::to_string(e.first));
    if (!kind.directed && e.first > e.second) std::swap(e.first, e.second);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  out_.assign(static_cast<size_t>(n), {});
  if (kind_.directed) in_.assign(static_cast<size_t>(n), {});
  for (const Edge& e : edges_) {
    if (kind_.directed) {
      out_[static_cast<size_t>(e.first)].push_back(e.second);
      in_[static_cast<size_t>(e.second)].push_back(e.first);
    } else {
      out_[static_cast<size_t>(e.first)].push_back(e.second);
      if (e.first != e.second) out_[static_cast<size_t>(e.second)].push_back(e.first);
    }
  }
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
  for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

int Graph::edge_id(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  if (!kind_.directed && u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::has_any_loop() const {
  for (const Edge& e : edges_)
    if (e.first == e.second) return true;
  return false;
}

Graph make_graph(GraphKind kind, int n, const std::vector<Edge>& edges) {
  return Graph(kind, n, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not in host");

  std::vector<int> relabel(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < verts.size(); ++i) relabel[static_cast<size_t>(verts[i])] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = relabel[static_cast<size_t>(e.first)];
    int b = relabel[static_cast<size_t>(e.second)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(g.kind(), static_cast<int>(verts.size()), edges);
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> result;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<size_t>(start)] >= 0) continue;
    int id = static_cast<int>(result.size());
    result.push_back({});
    stack.push_back(start);
    comp[static_cast<size_t>(start)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      result[static_cast<size_t>(id)].push_back(v);
      auto visit = [&](int w) {
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = id;
          stack.push_back(w);
        }
      };
      for (int w : g.out_neighbors(v)) visit(w);
      if (g.kind().directed)
        for (int w : g.in_neighbors(v)) visit(w);
    }
    std::sort(result[static_cast<size_t>(id)].begin(), result[static_cast<size_t>(id)].end());
  }
  // DFS starts at increasing ids, so classes are already ordered by smallest member.
  return result;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (!(a.kind() == b.kind())) fail(ErrorCode::KindMismatch, "disjoint_union of different kinds");
  std::vector<Edge> edges = a.edges();
  int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.first + shift, e.second + shift});
  return Graph(a.kind(), a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace symrep
