#include "symrep/aut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "symrep/error.hpp"

namespace symrep {

namespace {

// Iterated neighbor-color refinement (1-dimensional WL). Initial colors are
// (out-degree, in-degree, loop) triples; loop presence is seeded so loops are
// fixed structure. Returns a stable coloring with dense color ids.
std::vector<int> stable_coloring(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), 0);
  {
    std::map<std::tuple<int, int, bool>, int> index;
    for (int v = 0; v < n; ++v) {
      auto key = std::make_tuple(g.out_degree(v), g.kind().directed ? g.in_degree(v) : 0,
                                 g.has_loop(v));
      auto [it, fresh] = index.try_emplace(key, static_cast<int>(index.size()));
      color[static_cast<size_t>(v)] = it->second;
    }
  }
  size_t color_count = 0;
  {
    std::set<int> distinct(color.begin(), color.end());
    color_count = distinct.size();
  }
  while (true) {
    std::map<std::pair<int, std::pair<std::vector<int>, std::vector<int>>>, int> index;
    std::vector<int> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> out_sig, in_sig;
      for (int w : g.out_neighbors(v)) out_sig.push_back(color[static_cast<size_t>(w)]);
      std::sort(out_sig.begin(), out_sig.end());
      if (g.kind().directed) {
        for (int w : g.in_neighbors(v)) in_sig.push_back(color[static_cast<size_t>(w)]);
        std::sort(in_sig.begin(), in_sig.end());
      }
      auto key = std::make_pair(color[static_cast<size_t>(v)],
                                std::make_pair(std::move(out_sig), std::move(in_sig)));
      auto [it, fresh] = index.try_emplace(std::move(key), static_cast<int>(index.size()));
      next[static_cast<size_t>(v)] = it->second;
    }
    if (index.size() == color_count) return color;
    color_count = index.size();
    color = std::move(next);
  }
}

class AutSearch {
 public:
  explicit AutSearch(const Graph& g) : g_(g), color_(stable_coloring(g)) {
    int n = g_.vertex_count();
    // class sizes for seed selection
    std::vector<int> class_size;
    for (int v = 0; v < n; ++v) {
      if (color_[static_cast<size_t>(v)] >= static_cast<int>(class_size.size()))
        class_size.resize(static_cast<size_t>(color_[static_cast<size_t>(v)]) + 1, 0);
      ++class_size[static_cast<size_t>(color_[static_cast<size_t>(v)])];
    }
    // connectivity-first base order; seeds prefer small color classes
    std::vector<char> placed(static_cast<size_t>(n), 0);
    order_.reserve(static_cast<size_t>(n));
    while (static_cast<int>(order_.size()) < n) {
      int next = -1;
      bool next_attached = false;
      for (int v = 0; v < n; ++v) {
        if (placed[static_cast<size_t>(v)]) continue;
        bool attached = false;
        for (int w : g_.out_neighbors(v))
          if (placed[static_cast<size_t>(w)]) attached = true;
        if (g_.kind().directed)
          for (int w : g_.in_neighbors(v))
            if (placed[static_cast<size_t>(w)]) attached = true;
        if (next < 0) {
          next = v;
          next_attached = attached;
          continue;
        }
        if (attached != next_attached) {
          if (attached) {
            next = v;
            next_attached = true;
          }
          continue;
        }
        int sv = class_size[static_cast<size_t>(color_[static_cast<size_t>(v)])];
        int sn = class_size[static_cast<size_t>(color_[static_cast<size_t>(next)])];
        if (sv < sn || (sv == sn && v < next)) next = v;
      }
      placed[static_cast<size_t>(next)] = 1;
      order_.push_back(next);
    }
    map_.assign(static_cast<size_t>(n), -1);
    used_.assign(static_cast<size_t>(n), 0);
  }

  // One transporter per (level, target), plus nothing for identity targets.
  std::vector<Perm> harvest_generators() {
    std::vector<Perm> gens;
    int n = g_.vertex_count();
    std::vector<int> found;
    for (int level = 0; level < n; ++level) {
      int p = order_[static_cast<size_t>(level)];
      // identity prefix on order_[0..level-1]
      for (int j = 0; j < level; ++j) {
        int q = order_[static_cast<size_t>(j)];
        map_[static_cast<size_t>(q)] = q;
        used_[static_cast<size_t>(q)] = 1;
      }
      for (int c = 0; c < n; ++c) {
        if (c == p || !compatible(p, c)) continue;
        map_[static_cast<size_t>(p)] = c;
        used_[static_cast<size_t>(c)] = 1;
        if (extend(static_cast<size_t>(level) + 1, found)) gens.push_back(Perm(found));
        used_[static_cast<size_t>(c)] = 0;
        map_[static_cast<size_t>(p)] = -1;
      }
      std::fill(map_.begin(), map_.end(), -1);
      std::fill(used_.begin(), used_.end(), 0);
    }
    return gens;
  }

 private:
  bool compatible(int p, int h) const {
    if (used_[static_cast<size_t>(h)]) return false;
    if (color_[static_cast<size_t>(p)] != color_[static_cast<size_t>(h)]) return false;
    // adjacency must match exactly against every mapped vertex
    for (int q = 0; q < g_.vertex_count(); ++q) {
      int hq = map_[static_cast<size_t>(q)];
      if (hq < 0 || q == p) continue;
      if (g_.has_edge(p, q) != g_.has_edge(h, hq)) return false;
      if (g_.kind().directed && g_.has_edge(q, p) != g_.has_edge(hq, h)) return false;
    }
    return true;
  }

  // depth-first completion; snapshots the first full map into `found` and
  // restores the search state on the way out
  bool extend(size_t depth, std::vector<int>& found) {
    if (depth == order_.size()) {
      found = map_;
      return true;
    }
    int p = order_[static_cast<size_t>(depth)];
    if (map_[static_cast<size_t>(p)] >= 0) return extend(depth + 1, found);
    for (int h = 0; h < g_.vertex_count(); ++h) {
      if (!compatible(p, h)) continue;
      map_[static_cast<size_t>(p)] = h;
      used_[static_cast<size_t>(h)] = 1;
      bool done = extend(depth + 1, found);
      used_[static_cast<size_t>(h)] = 0;
      map_[static_cast<size_t>(p)] = -1;
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> color_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

std::string perm_key(const Perm& p) {
  std::string key;
  key.reserve(p.images().size());
  for (int v : p.images()) key.push_back(static_cast<char>(v));
  return key;
}

// Drop generators already produced by the preceding ones (incremental closure).
std::vector<Perm> reduce_generators(int n, const std::vector<Perm>& gens, long long cap) {
  std::vector<Perm> kept;
  std::unordered_set<std::string> generated;
  generated.insert(perm_key(Perm::identity(n)));
  std::vector<Perm> elements{Perm::identity(n)};
  bool saturated = false;  // closure gave up; keep everything from here on
  for (const Perm& g : gens) {
    if (!saturated && generated.count(perm_key(g))) continue;
    kept.push_back(g);
    if (saturated) continue;
    // re-close with the enlarged generator set
    size_t head = 0;
    generated.insert(perm_key(g));
    elements.push_back(g);
    for (; head < elements.size(); ++head) {
      for (const Perm& k : kept) {
        Perm next = k.compose(elements[head]);
        if (generated.insert(perm_key(next)).second) {
          elements.push_back(std::move(next));
          if (static_cast<long long>(elements.size()) > cap) {
            saturated = true;
            break;
          }
        }
      }
      if (saturated) break;
    }
  }
  return kept;
}

}  // namespace

Perm edge_perm(const Graph& g, const Perm& vertex_perm) {
  std::vector<int> img(static_cast<size_t>(g.edge_count()));
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    int target = g.edge_id(vertex_perm(e.first), vertex_perm(e.second));
    if (target < 0)
      fail(ErrorCode::BadParam, "vertex map does not preserve the edge set");
    img[static_cast<size_t>(id)] = target;
  }
  return Perm(std::move(img));
}

AutResult automorphisms(const Graph& g, const AutOptions& opt) {
  if (g.vertex_count() > opt.vertex_cap)
    fail(ErrorCode::TooLarge, "graph has " + std::to_string(g.vertex_count()) +
                                  " vertices, cap is " + std::to_string(opt.vertex_cap));
  AutResult result;
  int n = g.vertex_count();

  std::vector<Perm> raw;
  if (n > 0) raw = AutSearch(g).harvest_generators();
  result.generators = reduce_generators(n, raw, opt.closure_cap);
  std::sort(result.generators.begin(), result.generators.end());

  PermAction vertex_action(n, result.generators);
  result.vertex_orbits = orbits(vertex_action);

  std::vector<Perm> egens;
  egens.reserve(result.generators.size());
  for (const Perm& p : result.generators) egens.push_back(edge_perm(g, p));
  result.edge_orbits = orbits(PermAction(g.edge_count(), std::move(egens)));

  GroupClosure closure = enumerate_group(vertex_action, opt.closure_cap);
  result.order = static_cast<long long>(closure.elements.size());
  result.order_exact = closure.exact;
  return result;
}

bool is_vertex_transitive(const Graph& g, const AutOptions& opt) {
  return automorphisms(g, opt).vertex_orbits.class_count() <= 1;
}

bool is_edge_transitive(const Graph& g, const AutOptions& opt) {
  return automorphisms(g, opt).edge_orbits.class_count() <= 1;
}

}  // namespace symrep
