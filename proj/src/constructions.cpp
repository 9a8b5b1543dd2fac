#include "symrep/constructions.hpp"

#include <string>

#include "symrep/error.hpp"

namespace symrep {

Graph cycle(int length) {
  if (length < 3) fail(ErrorCode::BadParam, "cycle needs length >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) edges.push_back({i, (i + 1) % length});
  return Graph(kUndirected, length, edges);
}

Graph path(int edge_count) {
  if (edge_count < 0) fail(ErrorCode::BadParam, "path needs a nonnegative edge count");
  std::vector<Edge> edges;
  for (int i = 0; i < edge_count; ++i) edges.push_back({i, i + 1});
  return Graph(kUndirected, edge_count + 1, edges);
}

Graph star(int leaf_count, StarOrientation orientation) {
  if (leaf_count < 1) fail(ErrorCode::BadParam, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaf_count; ++i)
    edges.push_back(orientation == StarOrientation::In ? Edge{i, 0} : Edge{0, i});
  GraphKind kind = orientation == StarOrientation::None ? kUndirected : kDirected;
  return Graph(kind, leaf_count + 1, edges);
}

Graph complete(int n) {
  if (n < 0) fail(ErrorCode::BadParam, "negative vertex count");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(kUndirected, n, edges);
}

Graph complete_bipartite(int left, int right, bool directed_across) {
  if (left < 1 || right < 1) fail(ErrorCode::BadParam, "both parts need at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < left; ++i)
    for (int j = 0; j < right; ++j) edges.push_back({i, left + j});
  return Graph(directed_across ? kDirected : kUndirected, left + right, edges);
}

Graph cube_q3() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) edges.push_back({v, v ^ bit});
  return Graph(kUndirected, 8, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    edges.push_back({i, 5 + i});                // spokes
  }
  return Graph(kUndirected, 10, edges);
}

Graph chair() { return Graph(kUndirected, 5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}}); }

Graph circulant(int n, const std::vector<int>& steps) {
  if (n < 1) fail(ErrorCode::BadParam, "circulant needs at least one vertex");
  if (steps.empty()) fail(ErrorCode::BadParam, "circulant needs at least one step");
  std::vector<Edge> edges;
  for (int s : steps) {
    if (s % n == 0) fail(ErrorCode::BadParam, "step " + std::to_string(s) + " is 0 mod n");
    for (int i = 0; i < n; ++i) edges.push_back({i, ((i + s) % n + n) % n});
  }
  return Graph(kUndirected, n, edges);
}

Graph vt_completion(const Graph& k) {
  int n = k.vertex_count();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (k.kind().directed || i < j) edges.push_back({i, j});
    }
  if (k.kind().loops_allowed && k.has_any_loop())
    for (int i = 0; i < n; ++i) edges.push_back({i, i});
  return Graph(k.kind(), n, edges);
}

Graph disjoint_copies(const Graph& k, int copies) {
  if (copies < 1) fail(ErrorCode::BadParam, "need at least one copy");
  int n = k.vertex_count();
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c)
    for (const Edge& e : k.edges()) edges.push_back({c * n + e.first, c * n + e.second});
  return Graph(k.kind(), copies * n, edges);
}

Graph chained_copies(const Graph& k, int copies, int chain_length) {
  if (copies < 1) fail(ErrorCode::BadParam, "need at least one copy");
  if (chain_length < 1) fail(ErrorCode::BadParam, "chains need at least one edge");
  int n = k.vertex_count();
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c)
    for (const Edge& e : k.edges()) edges.push_back({c * n + e.first, c * n + e.second});
  int next_fresh = copies * n;
  for (int gap = 0; gap + 1 < copies; ++gap)
    for (int j = 0; j < n; ++j) {
      int from = gap * n + j;
      int to = (gap + 1) * n + j;
      int prev = from;
      for (int step = 1; step < chain_length; ++step) {
        edges.push_back({prev, next_fresh});
        prev = next_fresh++;
      }
      edges.push_back({prev, to});
    }
  int total = copies * n + (copies - 1) * n * (chain_length - 1);
  return Graph(k.kind(), total, edges);
}

HoneycombTorus honeycomb_torus(int n) {
  if (n < 2) fail(ErrorCode::BadParam, "torus size below 2 would create parallel edges");
  auto id = [n](int i, int j, int side) {
    return ((((i % n) + n) % n) * n + (((j % n) + n) % n)) * 2 + side;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      edges.push_back({id(i, j, 0), id(i, j, 1)});
      edges.push_back({id(i, j, 0), id(i - 1, j, 1)});
      edges.push_back({id(i, j, 0), id(i, j - 1, 1)});
    }
  HoneycombTorus result{Graph(kUndirected, 2 * n * n, edges), {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      result.marked_edge_ids.push_back(result.graph.edge_id(id(i, j, 0), id(i, j, 1)));
  std::sort(result.marked_edge_ids.begin(), result.marked_edge_ids.end());
  return result;
}

Graph joined_stars(int leaf_count, int copies) {
  if (leaf_count < 1) fail(ErrorCode::BadParam, "stars need at least one leaf");
  if (copies < 1) fail(ErrorCode::BadParam, "need at least one star");
  int block = leaf_count + 1;
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c)
    for (int j = 1; j <= leaf_count; ++j) edges.push_back({c * block, c * block + j});
  for (int c = 0; c + 1 < copies; ++c)
    for (int j = 1; j <= leaf_count; ++j) edges.push_back({c * block + j, (c + 1) * block + j});
  return Graph(kUndirected, copies * block, edges);
}

}  // namespace symrep
