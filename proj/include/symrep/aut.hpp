#pragma once

#include <vector>

#include "symrep/graph.hpp"
#include "symrep/perm.hpp"

namespace symrep {

struct AutOptions {
  int vertex_cap = 64;               // refuse larger graphs (TooLarge)
  long long closure_cap = 10000000;  // element cap for the order computation
};

struct AutResult {
  /// Generators of the full automorphism group, sorted by image array.
  std::vector<Perm> generators;
  /// Group order. Exact iff `order_exact`; otherwise the closure stopped at
  /// the cap and `order` is the element count reached (a lower bound).
  long long order = 1;
  bool order_exact = true;
  OrbitPartition vertex_orbits;
  /// Orbits on edge ids (empty partition for edgeless graphs).
  OrbitPartition edge_orbits;
};

/// Automorphism group of a graph: iterated degree refinement to a stable
/// coloring, then backtracking over color-compatible bijections. Generators
/// are one transporter per (base point, reachable target); the order comes
/// from breadth-first closure capped at `closure_cap`.
AutResult automorphisms(const Graph& g, const AutOptions& opt = {});

/// Single orbit on vertices (trivially true for n <= 1).
bool is_vertex_transitive(const Graph& g, const AutOptions& opt = {});
/// Single orbit on edges (vacuously true for edgeless graphs).
bool is_edge_transitive(const Graph& g, const AutOptions& opt = {});

/// The permutation a vertex map induces on edge ids.
Perm edge_perm(const Graph& g, const Perm& vertex_perm);

}  // namespace symrep
