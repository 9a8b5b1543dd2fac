#include "symrep/hitting.hpp"

#include <algorithm>
#include <limits>

#include "symrep/error.hpp"

namespace symrep {

namespace {

// Weighted hitting-set branch and bound over a dense element universe.
class Solver {
 public:
  Solver(std::vector<std::vector<int>> members, std::vector<long long> weights,
         long long max_nodes)
      : weights_(std::move(weights)), max_nodes_(max_nodes) {
    for (auto& m : members) {
      if (m.empty()) fail(ErrorCode::EmptyMember, "member set is empty");
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    // superset removal: a member containing another is hit whenever the
    // smaller one is
    std::vector<char> drop(members.size(), 0);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        if (i == j || drop[i] || drop[j]) continue;
        if (members[j].size() < members[i].size() &&
            std::includes(members[i].begin(), members[i].end(), members[j].begin(),
                          members[j].end()))
          drop[i] = 1;
      }
    for (size_t i = 0; i < members.size(); ++i)
      if (!drop[i]) members_.push_back(std::move(members[i]));

    element_members_.assign(weights_.size(), {});
    for (size_t mi = 0; mi < members_.size(); ++mi)
      for (int e : members_[mi]) element_members_[static_cast<size_t>(e)].push_back(static_cast<int>(mi));

    cover_count_.assign(members_.size(), 0);
    excluded_.assign(weights_.size(), 0);
  }

  // returns (cost, chosen element set, optimal)
  std::tuple<long long, std::vector<int>, bool> solve() {
    // singleton forcing before the search proper
    std::vector<int> forced;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t mi = 0; mi < members_.size(); ++mi) {
        if (cover_count_[mi] > 0 || members_[mi].size() != 1) continue;
        int e = members_[mi][0];
        forced.push_back(e);
        cover(e);
        changed = true;
      }
    }
    long long forced_cost = 0;
    for (int e : forced) forced_cost += weights_[static_cast<size_t>(e)];

    best_ = std::numeric_limits<long long>::max();
    best_set_.clear();
    chosen_.clear();
    // Best-effort mode needs an incumbent in case the budget kills the search
    // before the first leaf; the default mode keeps first-optimum semantics.
    if (max_nodes_ > 0) seed_greedy();
    search(0);

    std::vector<int> witness = forced;
    witness.insert(witness.end(), best_set_.begin(), best_set_.end());
    std::sort(witness.begin(), witness.end());
    return {forced_cost + best_, witness, !budget_hit_};
  }

  long long nodes() const { return nodes_; }

 private:
  void seed_greedy() {
    std::vector<int> extra_cover(members_.size(), 0);
    std::vector<int> picks;
    long long cost = 0;
    while (true) {
      int best_e = -1;
      long long best_gain = 0;
      for (int e = 0; e < static_cast<int>(weights_.size()); ++e) {
        long long gain = 0;
        for (int mi : element_members_[static_cast<size_t>(e)])
          if (cover_count_[static_cast<size_t>(mi)] + extra_cover[static_cast<size_t>(mi)] == 0)
            ++gain;
        if (gain == 0) continue;
        // most new coverage per unit weight, ties by id
        if (best_e < 0 || gain * weights_[static_cast<size_t>(best_e)] >
                              best_gain * weights_[static_cast<size_t>(e)]) {
          best_e = e;
          best_gain = gain;
        }
      }
      if (best_e < 0) break;
      picks.push_back(best_e);
      cost += weights_[static_cast<size_t>(best_e)];
      for (int mi : element_members_[static_cast<size_t>(best_e)])
        ++extra_cover[static_cast<size_t>(mi)];
    }
    best_ = cost;
    best_set_ = picks;
  }

  void cover(int e) {
    for (int mi : element_members_[static_cast<size_t>(e)]) ++cover_count_[static_cast<size_t>(mi)];
  }
  void uncover(int e) {
    for (int mi : element_members_[static_cast<size_t>(e)]) --cover_count_[static_cast<size_t>(mi)];
  }

  // greedy disjoint packing of uncovered members; each contributes its
  // cheapest alive element
  long long packing_bound() {
    long long bound = 0;
    packed_.assign(weights_.size(), 0);
    for (size_t mi = 0; mi < members_.size(); ++mi) {
      if (cover_count_[mi] > 0) continue;
      long long cheapest = std::numeric_limits<long long>::max();
      bool disjoint = true;
      for (int e : members_[mi]) {
        if (excluded_[static_cast<size_t>(e)]) continue;
        if (packed_[static_cast<size_t>(e)]) disjoint = false;
        cheapest = std::min(cheapest, weights_[static_cast<size_t>(e)]);
      }
      if (!disjoint) continue;
      if (cheapest == std::numeric_limits<long long>::max()) return -1;  // unhittable member
      bound += cheapest;
      for (int e : members_[mi])
        if (!excluded_[static_cast<size_t>(e)]) packed_[static_cast<size_t>(e)] = 1;
    }
    return bound;
  }

  void search(long long cost) {
    ++nodes_;
    if (max_nodes_ > 0 && nodes_ > max_nodes_) {
      budget_hit_ = true;
      return;
    }
    // select: smallest alive member, tie lowest min alive element
    int pick = -1;
    size_t pick_size = 0;
    int pick_min = 0;
    bool all_covered = true;
    for (size_t mi = 0; mi < members_.size(); ++mi) {
      if (cover_count_[mi] > 0) continue;
      all_covered = false;
      size_t alive = 0;
      int min_alive = std::numeric_limits<int>::max();
      for (int e : members_[mi])
        if (!excluded_[static_cast<size_t>(e)]) {
          ++alive;
          min_alive = std::min(min_alive, e);
        }
      if (alive == 0) return;  // all ways to hit this member were excluded
      if (pick < 0 || alive < pick_size || (alive == pick_size && min_alive < pick_min)) {
        pick = static_cast<int>(mi);
        pick_size = alive;
        pick_min = min_alive;
      }
    }
    if (all_covered) {
      if (cost < best_) {
        best_ = cost;
        best_set_ = chosen_;
      }
      return;
    }
    long long lb = packing_bound();
    if (lb < 0 || cost + lb >= best_) return;

    // branch on alive elements, lightest first (id tiebreak); element e_i is
    // excluded in the branches that follow it
    std::vector<int> branch;
    for (int e : members_[static_cast<size_t>(pick)])
      if (!excluded_[static_cast<size_t>(e)]) branch.push_back(e);
    std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
      return weights_[static_cast<size_t>(a)] < weights_[static_cast<size_t>(b)];
    });

    size_t locally_excluded = 0;
    for (int e : branch) {
      chosen_.push_back(e);
      cover(e);
      search(cost + weights_[static_cast<size_t>(e)]);
      uncover(e);
      chosen_.pop_back();
      if (budget_hit_) break;
      excluded_[static_cast<size_t>(e)] = 1;
      ++locally_excluded;
    }
    size_t undone = 0;
    for (int e : branch) {
      if (undone == locally_excluded) break;
      excluded_[static_cast<size_t>(e)] = 0;
      ++undone;
    }
  }

  std::vector<std::vector<int>> members_;
  std::vector<std::vector<int>> element_members_;
  std::vector<long long> weights_;
  std::vector<int> cover_count_;
  std::vector<char> excluded_;
  std::vector<char> packed_;
  std::vector<int> chosen_;
  std::vector<int> best_set_;
  long long best_ = 0;
  long long nodes_ = 0;
  long long max_nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

HittingResult min_hitting_set(const SetFamily& fam, const HittingOptions& opt) {
  HittingResult result;
  if (fam.empty()) return result;

  // remap points to a dense universe
  std::vector<int> points;
  for (const auto& m : fam.sets()) points.insert(points.end(), m.begin(), m.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<std::vector<int>> members;
  members.reserve(fam.sets().size());
  for (const auto& m : fam.sets()) {
    std::vector<int> mapped;
    mapped.reserve(m.size());
    for (int p : m)
      mapped.push_back(static_cast<int>(std::lower_bound(points.begin(), points.end(), p) -
                                        points.begin()));
    members.push_back(std::move(mapped));
  }

  Solver solver(std::move(members), std::vector<long long>(points.size(), 1), opt.max_nodes);
  auto [cost, witness, optimal] = solver.solve();
  result.size = cost;
  result.witness.reserve(witness.size());
  for (int e : witness) result.witness.push_back(points[static_cast<size_t>(e)]);
  result.nodes_explored = solver.nodes();
  result.optimal = optimal;
  return result;
}

InvariantHittingResult min_invariant_hitting(const SetFamily& fam, const OrbitPartition& orbits,
                                             const HittingOptions& opt) {
  InvariantHittingResult result;
  if (fam.empty()) return result;
  if (fam.max_point() >= orbits.point_count())
    fail(ErrorCode::PartitionMismatch, "orbit partition does not cover family point " +
                                           std::to_string(fam.max_point()));

  std::vector<std::vector<int>> quotient;
  quotient.reserve(fam.sets().size());
  for (const auto& m : fam.sets()) {
    std::vector<int> classes;
    classes.reserve(m.size());
    for (int p : m) classes.push_back(orbits.class_of(p));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    quotient.push_back(std::move(classes));
  }
  std::vector<long long> weights;
  weights.reserve(orbits.classes.size());
  for (const auto& cls : orbits.classes) weights.push_back(static_cast<long long>(cls.size()));

  Solver solver(std::move(quotient), std::move(weights), opt.max_nodes);
  auto [cost, chosen, optimal] = solver.solve();
  result.size = cost;
  result.chosen_classes = chosen;
  for (int c : chosen) {
    const auto& cls = orbits.classes[static_cast<size_t>(c)];
    result.witness.insert(result.witness.end(), cls.begin(), cls.end());
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.nodes_explored = solver.nodes();
  result.optimal = optimal;
  return result;
}

}  // namespace symrep
