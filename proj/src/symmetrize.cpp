#include "symrep/symmetrize.hpp"

#include <algorithm>

#include "symrep/error.hpp"

namespace symrep {

namespace {

std::vector<int> sorted_unique_points(const PermAction& a, const std::vector<int>& pts,
                                      const char* what) {
  std::vector<int> s = pts;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= a.n))
    fail(ErrorCode::OutOfRange, std::string(what) + " point outside 0.." + std::to_string(a.n - 1));
  return s;
}

// |class ∩ X| per orbit class; X sorted.
std::vector<long long> class_hits(const OrbitPartition& orb, const std::vector<int>& x) {
  std::vector<long long> hits(orb.classes.size(), 0);
  for (int p : x) ++hits[static_cast<size_t>(orb.class_of(p))];
  return hits;
}

Rational member_sum(const OrbitPartition& orb, const std::vector<long long>& hits,
                    const std::vector<int>& member) {
  Rational sum = 0;
  for (int f : member) {
    int c = orb.class_of(f);
    sum += Rational(hits[static_cast<size_t>(c)], orb.classes[static_cast<size_t>(c)].size());
  }
  return sum;
}

}  // namespace

SymmetrizeResult symmetrize(const PermAction& a, const SetFamily& fam, const std::vector<int>& X) {
  std::vector<int> x = sorted_unique_points(a, X, "transversal");
  if (fam.max_point() >= a.n) fail(ErrorCode::OutOfRange, "family point outside action");
  if (!is_invariant_family(a, fam))
    fail(ErrorCode::NotInvariant, "family is not closed under the generators");
  if (!verify_transversal(fam, x))
    fail(ErrorCode::NotTransversal, "given set misses a family member");

  OrbitPartition orb = orbits(a);
  std::vector<long long> hits = class_hits(orb, x);

  SymmetrizeResult result;
  result.max_member_size = fam.max_cardinality();
  result.bound = static_cast<long long>(result.max_member_size) * static_cast<long long>(x.size());

  const long long m = result.max_member_size;
  for (int y = 0; y < a.n; ++y) {
    int c = orb.class_of(y);
    long long orbit_size = static_cast<long long>(orb.classes[static_cast<size_t>(c)].size());
    // Exact membership rule: |orbit ∩ X| * m >= |orbit|.
    if (hits[static_cast<size_t>(c)] * m >= orbit_size) result.invariant_transversal.push_back(y);
  }

  result.neumann_sums.reserve(fam.sets().size());
  for (const auto& member : fam.sets()) result.neumann_sums.push_back(member_sum(orb, hits, member));
  return result;
}

Rational neumann_sum(const PermAction& a, const std::vector<int>& F, const std::vector<int>& X) {
  if (F.empty()) fail(ErrorCode::EmptySet, "neumann_sum over an empty set");
  std::vector<int> f = sorted_unique_points(a, F, "member");
  std::vector<int> x = sorted_unique_points(a, X, "transversal");
  OrbitPartition orb = orbits(a);
  return member_sum(orb, class_hits(orb, x), f);
}

}  // namespace symrep
