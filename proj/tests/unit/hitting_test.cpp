#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symrep/aut.hpp"
#include "symrep/constructions.hpp"
#include "symrep/hitting.hpp"
#include "symrep/occurrences.hpp"
#include "symrep/symmetrize.hpp"

using namespace symrep;

namespace {

SetFamily random_family(std::mt19937& rng, int max_point, int max_sets, int max_size) {
  std::uniform_int_distribution<int> set_count(1, max_sets);
  std::uniform_int_distribution<int> set_size(1, max_size);
  std::uniform_int_distribution<int> point(0, max_point);
  std::vector<std::vector<int>> sets;
  int count = set_count(rng);
  for (int s = 0; s < count; ++s) {
    std::vector<int> member;
    int target = set_size(rng);
    for (int i = 0; i < target; ++i) member.push_back(point(rng));
    sets.push_back(member);
  }
  return SetFamily(std::move(sets));
}

OrbitPartition random_partition(std::mt19937& rng, int points, int classes) {
  OrbitPartition part;
  part.classes.assign(static_cast<size_t>(classes), {});
  part.point_to_class.assign(static_cast<size_t>(points), 0);
  for (int p = 0; p < points; ++p) {
    int c = p < classes ? p : static_cast<int>(rng() % classes);  // no empty class
    part.point_to_class[(size_t)p] = c;
    part.classes[(size_t)c].push_back(p);
  }
  return part;
}

}  // namespace

TEST_SUITE("hitting") {
  TEST_CASE("triangle of pairs needs two points") {
    HittingResult result = min_hitting_set(SetFamily({{1, 2}, {2, 3}, {1, 3}}));
    CHECK(result.size == 2);
    CHECK(result.optimal);
    CHECK(verify_transversal(SetFamily({{1, 2}, {2, 3}, {1, 3}}), result.witness));
  }

  TEST_CASE("empty family needs nothing") {
    HittingResult result = min_hitting_set(SetFamily());
    CHECK(result.size == 0);
    CHECK(result.witness.empty());
  }

  TEST_CASE("empty members are rejected") {
    CHECK(oracles::error_code_of([] { SetFamily({{1}, {}}); }) == ErrorCode::EmptyMember);
  }

  TEST_CASE("triangles of K4 need two vertices") {
    OccurrenceFamily fam = enumerate_occurrences(complete(4), {cycle(3)}, Mode::Vertex);
    HittingResult result = min_hitting_set(fam.sets);
    CHECK(result.size == 2);
    CHECK(result.size == oracles::brute_min_hitting(fam.sets.sets()));
  }

  TEST_CASE("solver agrees with exhaustive search") {
    std::mt19937 rng(53);
    for (int iter = 0; iter < 120; ++iter) {
      SetFamily fam = random_family(rng, 13, 18, 5);
      HittingResult result = min_hitting_set(fam);
      CHECK(result.size == oracles::brute_min_hitting(fam.sets()));
      CHECK(verify_transversal(fam, result.witness));
      CHECK(static_cast<long long>(result.witness.size()) == result.size);
    }
  }

  TEST_CASE("the witness is deterministic") {
    std::mt19937 rng(59);
    for (int iter = 0; iter < 10; ++iter) {
      SetFamily fam = random_family(rng, 10, 12, 4);
      CHECK(min_hitting_set(fam).witness == min_hitting_set(fam).witness);
    }
  }

  TEST_CASE("singleton orbits reduce to the plain problem") {
    std::mt19937 rng(61);
    for (int iter = 0; iter < 30; ++iter) {
      SetFamily fam = random_family(rng, 9, 10, 4);
      OrbitPartition singletons = random_partition(rng, 10, 10);
      InvariantHittingResult inv = min_invariant_hitting(fam, singletons);
      CHECK(inv.size == min_hitting_set(fam).size);
    }
  }

  TEST_CASE("a single orbit forces all points") {
    OrbitPartition one;
    one.classes = {{0, 1, 2, 3}};
    one.point_to_class = {0, 0, 0, 0};
    InvariantHittingResult inv = min_invariant_hitting(SetFamily({{1}, {2, 3}}), one);
    CHECK(inv.size == 4);
    CHECK(inv.witness == std::vector<int>{0, 1, 2, 3});
    CHECK(inv.chosen_classes == std::vector<int>{0});
  }

  TEST_CASE("invariant edge marking of K_{2,3} for two disjoint edges") {
    Graph host = complete_bipartite(2, 3);
    OccurrenceFamily fam =
        enumerate_occurrences(host, {disjoint_union(path(1), path(1))}, Mode::Edge);
    CHECK(min_hitting_set(fam.sets).size == 3);
    AutResult aut = automorphisms(host);
    InvariantHittingResult inv = min_invariant_hitting(fam.sets, aut.edge_orbits);
    CHECK(inv.size == 6);
  }

  TEST_CASE("quotient solves match exhaustive union-of-classes search") {
    std::mt19937 rng(67);
    for (int iter = 0; iter < 60; ++iter) {
      int points = 6 + static_cast<int>(rng() % 7);
      SetFamily fam = random_family(rng, points - 1, 10, 4);
      OrbitPartition part = random_partition(rng, points, 2 + static_cast<int>(rng() % 5));
      InvariantHittingResult inv = min_invariant_hitting(fam, part);
      CHECK(inv.size == oracles::brute_min_invariant_hitting(fam.sets(), part));
      CHECK(verify_transversal(fam, inv.witness));
      CHECK(inv.size >= min_hitting_set(fam).size);
    }
  }

  TEST_CASE("partition must cover the family") {
    OrbitPartition small;
    small.classes = {{0, 1}};
    small.point_to_class = {0, 0};
    SetFamily outside(std::vector<std::vector<int>>{{3}});
    CHECK(oracles::error_code_of([&] { min_invariant_hitting(outside, small); }) ==
          ErrorCode::PartitionMismatch);
  }

  TEST_CASE("node budget yields a valid but possibly suboptimal witness") {
    SetFamily fam({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    HittingOptions budget;
    budget.max_nodes = 1;
    HittingResult result = min_hitting_set(fam, budget);
    CHECK_FALSE(result.optimal);
    CHECK(verify_transversal(fam, result.witness));
    CHECK(result.size >= min_hitting_set(fam).size);
  }

  TEST_CASE("search statistics are populated") {
    HittingResult result = min_hitting_set(SetFamily({{0, 1}, {1, 2}}));
    CHECK(result.nodes_explored > 0);
    CHECK(result.optimal);
  }
}
