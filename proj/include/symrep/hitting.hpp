#pragma once

#include <vector>

#include "symrep/perm.hpp"
#include "symrep/set_family.hpp"

namespace symrep {

struct HittingOptions {
  /// Node budget for a documented best-effort mode; 0 means solve to
  /// optimality (the default — `optimal` is then always true).
  long long max_nodes = 0;
};

struct HittingResult {
  long long size = 0;
  std::vector<int> witness;
  long long nodes_explored = 0;
  bool optimal = true;
};

/// Exact minimum-cardinality hitting set by branch and bound: branch on the
/// elements of a smallest uncovered member (ascending id), lower-bound by a
/// greedily packed collection of pairwise-disjoint uncovered members, reduce
/// by superset removal and singleton forcing. Deterministic; the witness is
/// the first optimum found.
HittingResult min_hitting_set(const SetFamily& fam, const HittingOptions& opt = {});

struct InvariantHittingResult {
  long long size = 0;               // total point weight = |union of chosen classes|
  std::vector<int> witness;         // the realized point set
  std::vector<int> chosen_classes;  // orbit class ids, ascending
  long long nodes_explored = 0;
  bool optimal = true;
};

/// Minimum over unions of orbit classes hitting every member: solved as a
/// weighted hitting set on the quotient instance (element = class, weight =
/// class size, member = classes meeting it).
InvariantHittingResult min_invariant_hitting(const SetFamily& fam, const OrbitPartition& orbits,
                                             const HittingOptions& opt = {});

}  // namespace symrep
