#pragma once

#include <vector>

#include "symrep/graph.hpp"

namespace symrep {

enum class StarOrientation { None, Out, In };

/// Cycle on `length` >= 3 vertices (0-1-...-0).
Graph cycle(int length);
/// Path with `edge_count` >= 0 edges on edge_count+1 vertices.
Graph path(int edge_count);
/// Star with `leaf_count` >= 1 leaves; vertex 0 is the center. Out/In produce
/// a directed star with arcs leaving/entering the center.
Graph star(int leaf_count, StarOrientation orientation = StarOrientation::None);
/// Complete undirected graph.
Graph complete(int n);
/// K_{left,right}; vertices 0..left-1 form the first part. With
/// `directed_across`, all edges become arcs from the first part to the second.
Graph complete_bipartite(int left, int right, bool directed_across = false);
/// 3-cube: vertices 0..7 as bit strings, edges between strings at Hamming
/// distance 1.
Graph cube_q3();
Graph petersen();
/// The 5-vertex graph star-plus-pendant: center 0 with leaves 1,2,3 and an
/// extra edge 1-4.
Graph chair();
/// Circulant graph: i ~ i+s (mod n) for each step s.
Graph circulant(int n, const std::vector<int>& steps);

/// A vertex-transitive supergraph of `k` on the same vertex set: the complete
/// graph (complete digraph for directed kinds), with loops at every vertex
/// when `k` carries any loop.
Graph vt_completion(const Graph& k);

/// `copies` vertex-disjoint copies of `k`; copy i occupies ids
/// [i*k.n, (i+1)*k.n).
Graph disjoint_copies(const Graph& k, int copies);

/// disjoint_copies plus, for every vertex j and every copy i < copies-1, a
/// fresh path of `chain_length` edges from vertex j of copy i to vertex j of
/// copy i+1. Chain interior ids follow the copy block, ordered by
/// (gap, vertex, step).
Graph chained_copies(const Graph& k, int copies, int chain_length);

/// Quotient of the hexagonal lattice by the sublattice n*Z x n*Z: vertices
/// (i,j,side) with id ((i*n)+j)*2+side, side 0 adjacent to (i,j,1), (i-1,j,1),
/// (i,j-1,1) mod n. 3-regular bipartite on 2n^2 vertices. The marked edge ids
/// are the class {(i,j,0)-(i,j,1)}, one per cell.
struct HoneycombTorus {
  Graph graph;
  std::vector<int> marked_edge_ids;
};
HoneycombTorus honeycomb_torus(int n);

/// `copies` stars with `leaf_count` leaves each; consecutive stars are joined
/// by the perfect matching between corresponding leaves (centers stay degree
/// leaf_count).
Graph joined_stars(int leaf_count, int copies);

}  // namespace symrep
