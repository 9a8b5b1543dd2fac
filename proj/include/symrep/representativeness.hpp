#pragma once

#include <vector>

#include "symrep/aut.hpp"
#include "symrep/graph.hpp"
#include "symrep/hitting.hpp"
#include "symrep/occurrences.hpp"

namespace symrep {

/// The representativeness of a pattern list in a host: the minimum number of
/// vertices (edges) meeting every occurrence, plus the same minimum restricted
/// to automorphism-invariant sets when requested.
struct RepResult {
  long long value = 0;
  std::vector<int> witness;
  bool has_symmetric = false;
  long long symmetric_value = 0;
  std::vector<int> symmetric_witness;  // a union of orbit classes
  Mode mode = Mode::Vertex;
  /// Max pattern size in the chosen mode; the cost-of-symmetry factor:
  /// value <= symmetric_value <= bound_factor * value.
  int bound_factor = 0;
};

RepResult representativeness(const Graph& host, const std::vector<Graph>& patterns, Mode mode,
                             bool with_symmetric = true, const AutOptions& aut_opt = {});

}  // namespace symrep
