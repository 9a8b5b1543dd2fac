#include "symrep/occurrences.hpp"

#include <algorithm>
#include <set>

#include "symrep/error.hpp"

namespace symrep {

const char* to_string(Mode mode) { return mode == Mode::Vertex ? "vertex" : "edge"; }

Mode mode_from_string(const std::string& s) {
  if (s == "vertex") return Mode::Vertex;
  if (s == "edge") return Mode::Edge;
  fail(ErrorCode::BadParam, "mode must be 'vertex' or 'edge', got '" + s + "'");
}

namespace {

// Backtracking monomorphism search. Pattern vertices are visited in a
// connectivity-first order so each step after the first in a component is
// pinned down by an already-mapped neighbor.
class MonoSearch {
 public:
  MonoSearch(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {
    int k = pat_.vertex_count();
    order_.reserve(static_cast<size_t>(k));
    std::vector<char> placed(static_cast<size_t>(k), 0);
    while (static_cast<int>(order_.size()) < k) {
      int next = -1;
      // prefer a vertex adjacent to the already-ordered ones, highest degree first
      for (int v = 0; v < k; ++v) {
        if (placed[static_cast<size_t>(v)]) continue;
        bool attached = false;
        for (int u : pat_.out_neighbors(v))
          if (placed[static_cast<size_t>(u)]) attached = true;
        if (pat_.kind().directed)
          for (int u : pat_.in_neighbors(v))
            if (placed[static_cast<size_t>(u)]) attached = true;
        if (!attached && !order_.empty() && has_attached(placed)) continue;
        if (next < 0 || better_seed(v, next, attached, placed)) next = v;
      }
      placed[static_cast<size_t>(next)] = 1;
      order_.push_back(next);
    }
    map_.assign(static_cast<size_t>(k), -1);
    used_.assign(static_cast<size_t>(host_.vertex_count()), 0);
  }

  // Visitor gets the pattern->host map; returns false to stop the search.
  template <typename Fn>
  bool run(Fn&& visit) {
    return extend(0, visit);
  }

 private:
  bool has_attached(const std::vector<char>& placed) const {
    for (int v = 0; v < pat_.vertex_count(); ++v) {
      if (placed[static_cast<size_t>(v)]) continue;
      for (int u : pat_.out_neighbors(v))
        if (placed[static_cast<size_t>(u)]) return true;
      if (pat_.kind().directed)
        for (int u : pat_.in_neighbors(v))
          if (placed[static_cast<size_t>(u)]) return true;
    }
    return false;
  }

  bool better_seed(int v, int cur, bool /*attached*/, const std::vector<char>&) const {
    if (pat_.degree(v) != pat_.degree(cur)) return pat_.degree(v) > pat_.degree(cur);
    return v < cur;
  }

  bool feasible(int p, int h) const {
    if (used_[static_cast<size_t>(h)]) return false;
    if (pat_.has_loop(p) && !host_.has_loop(h)) return false;
    if (host_.out_degree(h) < pat_.out_degree(p)) return false;
    if (pat_.kind().directed && host_.in_degree(h) < pat_.in_degree(p)) return false;
    // every already-mapped pattern neighbor must be a host neighbor
    for (int q : pat_.out_neighbors(p)) {
      int hq = map_[static_cast<size_t>(q)];
      if (hq >= 0 && !host_.has_edge(h, hq)) return false;
    }
    if (pat_.kind().directed)
      for (int q : pat_.in_neighbors(p)) {
        int hq = map_[static_cast<size_t>(q)];
        if (hq >= 0 && !host_.has_edge(hq, h)) return false;
      }
    return true;
  }

  template <typename Fn>
  bool extend(size_t depth, Fn&& visit) {
    if (depth == order_.size()) return visit(map_);
    int p = order_[depth];

    // candidate pool: neighbors of a mapped pattern-neighbor when one exists
    const std::vector<int>* pool = nullptr;
    for (int q : pat_.out_neighbors(p)) {
      int hq = map_[static_cast<size_t>(q)];
      if (hq < 0) continue;
      const std::vector<int>& cand = host_.in_neighbors(hq);
      if (!pool || cand.size() < pool->size()) pool = &cand;
    }
    if (pat_.kind().directed)
      for (int q : pat_.in_neighbors(p)) {
        int hq = map_[static_cast<size_t>(q)];
        if (hq < 0) continue;
        const std::vector<int>& cand = host_.out_neighbors(hq);
        if (!pool || cand.size() < pool->size()) pool = &cand;
      }

    auto try_candidate = [&](int h) -> bool {
      if (!feasible(p, h)) return true;
      map_[static_cast<size_t>(p)] = h;
      used_[static_cast<size_t>(h)] = 1;
      bool keep_going = extend(depth + 1, visit);
      used_[static_cast<size_t>(h)] = 0;
      map_[static_cast<size_t>(p)] = -1;
      return keep_going;
    };

    if (pool) {
      for (int h : *pool)
        if (!try_candidate(h)) return false;
    } else {
      for (int h = 0; h < host_.vertex_count(); ++h)
        if (!try_candidate(h)) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

void check_pattern(const Graph& host, const Graph& pattern, Mode mode) {
  if (!(host.kind() == pattern.kind()))
    fail(ErrorCode::KindMismatch, "host and pattern have different graph kinds");
  if (mode == Mode::Vertex && pattern.vertex_count() == 0)
    fail(ErrorCode::EmptyPattern, "vertex mode needs a pattern with at least one vertex");
  if (mode == Mode::Edge && pattern.edge_count() == 0)
    fail(ErrorCode::EmptyPattern, "edge mode needs a pattern with at least one edge");
}

}  // namespace

OccurrenceFamily enumerate_occurrences(const Graph& host, const std::vector<Graph>& patterns,
                                       Mode mode) {
  if (patterns.empty()) fail(ErrorCode::EmptyPattern, "no patterns given");
  for (const Graph& p : patterns) check_pattern(host, p, mode);

  std::set<std::vector<int>> images;
  for (const Graph& pat : patterns) {
    MonoSearch search(host, pat);
    search.run([&](const std::vector<int>& map) {
      std::vector<int> image;
      if (mode == Mode::Vertex) {
        image = map;
      } else {
        image.reserve(static_cast<size_t>(pat.edge_count()));
        for (const Edge& e : pat.edges())
          image.push_back(host.edge_id(map[static_cast<size_t>(e.first)],
                                       map[static_cast<size_t>(e.second)]));
      }
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
      return true;
    });
  }

  OccurrenceFamily fam;
  fam.mode = mode;
  fam.host = host;
  fam.sets = SetFamily(std::vector<std::vector<int>>(images.begin(), images.end()));
  fam.pattern_sizes.reserve(patterns.size());
  for (const Graph& p : patterns) fam.pattern_sizes.push_back({p.vertex_count(), p.edge_count()});
  return fam;
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (!(host.kind() == pattern.kind()))
    fail(ErrorCode::KindMismatch, "host and pattern have different graph kinds");
  if (pattern.vertex_count() == 0) return true;
  if (pattern.vertex_count() > host.vertex_count()) return false;
  bool found = false;
  MonoSearch search(host, pattern);
  search.run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (!(a.kind() == b.kind()) || a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  return contains_subgraph(a, b);
}

namespace {

bool mars_forbidden(const Graph& induced) {
  // Forbidden: fewer than 2 members with outdegree >= 3 inside the subset.
  int respectful = 0;
  for (int v = 0; v < induced.vertex_count(); ++v) {
    int outdeg = induced.out_degree(v);
    if (induced.has_loop(v)) --outdeg;
    if (outdeg >= 3) ++respectful;
  }
  return respectful < 2;
}

}  // namespace

SetFamily predicate_family(const Graph& host, int subset_size, const std::string& predicate) {
  if (subset_size < 0 || subset_size > host.vertex_count())
    fail(ErrorCode::OutOfRange, "subset size " + std::to_string(subset_size) +
                                    " exceeds host vertex count");
  if (predicate != "mars") fail(ErrorCode::UnknownPredicate, "unknown predicate '" + predicate + "'");
  if (!host.kind().directed) fail(ErrorCode::KindMismatch, "'mars' needs a directed host");

  std::vector<std::vector<int>> members;
  std::vector<int> subset(static_cast<size_t>(subset_size));
  // lexicographic enumeration of subsets
  auto recurse = [&](auto&& self, int pos, int next) -> void {
    if (pos == subset_size) {
      if (mars_forbidden(induced_subgraph(host, subset))) members.push_back(subset);
      return;
    }
    for (int v = next; v < host.vertex_count(); ++v) {
      subset[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  recurse(recurse, 0, 0);
  return SetFamily(std::move(members));
}

}  // namespace symrep
