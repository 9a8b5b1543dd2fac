#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symrep/constructions.hpp"
#include "symrep/representativeness.hpp"
#include "symrep/symmetrize.hpp"

using namespace symrep;

TEST_SUITE("representativeness") {
  TEST_CASE("triangles in K4: symmetry costs everything") {
    RepResult rep = representativeness(complete(4), {cycle(3)}, Mode::Vertex);
    CHECK(rep.value == 2);
    CHECK(rep.symmetric_value == 4);
    CHECK(rep.bound_factor == 3);
    CHECK(rep.witness.size() == 2);
    CHECK(rep.symmetric_witness == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("three disjoint triangles") {
    Graph host = disjoint_copies(complete(3), 3);
    RepResult rep = representativeness(host, {cycle(3)}, Mode::Vertex);
    CHECK(rep.value == 3);
    CHECK(rep.symmetric_value == 9);
  }

  TEST_CASE("two-edge paths in the 6-cycle, edge mode") {
    RepResult rep = representativeness(cycle(6), {path(2)}, Mode::Edge);
    CHECK(rep.value == 3);
    CHECK(rep.symmetric_value == 6);
    CHECK(rep.bound_factor == 2);
  }

  TEST_CASE("no occurrences means empty witnesses") {
    RepResult rep = representativeness(path(1), {cycle(3)}, Mode::Vertex);
    CHECK(rep.value == 0);
    CHECK(rep.symmetric_value == 0);
    CHECK(rep.witness.empty());
    CHECK(rep.symmetric_witness.empty());
  }

  TEST_CASE("symmetric computation is optional") {
    RepResult rep = representativeness(complete(4), {cycle(3)}, Mode::Vertex, false);
    CHECK(rep.value == 2);
    CHECK_FALSE(rep.has_symmetric);
  }

  TEST_CASE("sandwich property on random pairs") {
    std::mt19937 rng(73);
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
      Graph host = oracles::random_graph(rng, 7, 0.4);
      Graph pattern = oracles::random_graph(rng, 4, 0.6);
      for (Mode mode : {Mode::Vertex, Mode::Edge}) {
        if (mode == Mode::Edge && pattern.edge_count() == 0) continue;
        RepResult rep = representativeness(host, {pattern}, mode);
        CHECK(rep.value <= rep.symmetric_value);
        CHECK(rep.symmetric_value <= rep.value * rep.bound_factor);
        ++checked;
      }
    }
    CHECK(checked >= 50);
  }

  TEST_CASE("adding patterns never lowers the value") {
    std::mt19937 rng(79);
    for (int iter = 0; iter < 20; ++iter) {
      Graph host = oracles::random_graph(rng, 6, 0.5);
      Graph p1 = oracles::random_graph(rng, 3, 0.6);
      Graph p2 = oracles::random_graph(rng, 3, 0.6);
      if (p1.vertex_count() == 0 || p2.vertex_count() == 0) continue;
      long long single = representativeness(host, {p1}, Mode::Vertex, false).value;
      long long both = representativeness(host, {p1, p2}, Mode::Vertex, false).value;
      CHECK(both >= single);
    }
  }

  TEST_CASE("symmetric witnesses are unions of orbits") {
    std::mt19937 rng(83);
    for (int iter = 0; iter < 15; ++iter) {
      Graph host = oracles::random_graph(rng, 6, 0.5);
      Graph pattern = oracles::random_graph(rng, 3, 0.7);
      if (pattern.vertex_count() == 0 || host.vertex_count() == 0) continue;
      RepResult rep = representativeness(host, {pattern}, Mode::Vertex);
      AutResult aut = automorphisms(host);
      PermAction action(host.vertex_count(), aut.generators);
      for (const Perm& g : aut.generators)
        CHECK(act_on_set(action, g, rep.symmetric_witness) == rep.symmetric_witness);
      // each touched orbit is fully contained
      for (int v : rep.symmetric_witness) {
        int c = aut.vertex_orbits.class_of(v);
        for (int w : aut.vertex_orbits.classes[(size_t)c])
          CHECK(std::binary_search(rep.symmetric_witness.begin(), rep.symmetric_witness.end(), w));
      }
    }
  }

  TEST_CASE("vertex-transitive hosts pay the full vertex count") {
    for (const Graph& host : {cycle(6), cube_q3(), petersen()}) {
      RepResult rep = representativeness(host, {path(2)}, Mode::Vertex);
      CHECK(rep.symmetric_value == host.vertex_count());
    }
  }
}
