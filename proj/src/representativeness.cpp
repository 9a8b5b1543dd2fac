#include "symrep/representativeness.hpp"

#include <algorithm>

namespace symrep {

RepResult representativeness(const Graph& host, const std::vector<Graph>& patterns, Mode mode,
                             bool with_symmetric, const AutOptions& aut_opt) {
  OccurrenceFamily occ = enumerate_occurrences(host, patterns, mode);

  RepResult result;
  result.mode = mode;
  for (const auto& [vertices, edge_total] : occ.pattern_sizes)
    result.bound_factor = std::max(result.bound_factor, mode == Mode::Vertex ? vertices : edge_total);

  HittingResult plain = min_hitting_set(occ.sets);
  result.value = plain.size;
  result.witness = std::move(plain.witness);

  if (with_symmetric) {
    AutResult aut = automorphisms(host, aut_opt);
    const OrbitPartition& part = mode == Mode::Vertex ? aut.vertex_orbits : aut.edge_orbits;
    InvariantHittingResult inv = min_invariant_hitting(occ.sets, part);
    result.has_symmetric = true;
    result.symmetric_value = inv.size;
    result.symmetric_witness = std::move(inv.witness);
  }
  return result;
}

}  // namespace symrep
