#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symrep/aut.hpp"
#include "symrep/constructions.hpp"

using namespace symrep;

TEST_SUITE("aut") {
  TEST_CASE("complete graph has the full symmetric group") {
    AutResult aut = automorphisms(complete(4));
    CHECK(aut.order == 24);
    CHECK(aut.order_exact);
    CHECK(aut.vertex_orbits.class_count() == 1);
    REQUIRE(aut.edge_orbits.class_count() == 1);
    CHECK(aut.edge_orbits.classes[0].size() == 6);
  }

  TEST_CASE("path endpoints swap") {
    AutResult aut = automorphisms(path(2));
    CHECK(aut.order == 2);
    REQUIRE(aut.vertex_orbits.class_count() == 2);
    CHECK(aut.vertex_orbits.classes[0] == std::vector<int>{0, 2});
    CHECK(aut.vertex_orbits.classes[1] == std::vector<int>{1});
    CHECK(aut.edge_orbits.class_count() == 1);
  }

  TEST_CASE("petersen graph is 120-fold symmetric") {
    AutResult aut = automorphisms(petersen());
    CHECK(aut.order == 120);
    CHECK(aut.vertex_orbits.class_count() == 1);
    CHECK(aut.edge_orbits.class_count() == 1);
  }

  TEST_CASE("orders match the full bijection search") {
    std::mt19937 rng(41);
    std::vector<Graph> cases = {cycle(4), complete(4), path(3), cube_q3(),
                                make_graph(kUndirected, 4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})};
    for (int iter = 0; iter < 10; ++iter) cases.push_back(oracles::random_graph(rng, 6, 0.4));
    for (const Graph& g : cases) {
      AutResult aut = automorphisms(g);
      REQUIRE(aut.order_exact);
      CHECK(aut.order == oracles::brute_aut_count(g));
    }
  }

  TEST_CASE("order matches brute force on every 5-vertex graph") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (size_t p = 0; p < pairs.size(); ++p)
        if (mask & (1u << p)) edges.push_back(pairs[p]);
      Graph g(kUndirected, 5, edges);
      AutResult aut = automorphisms(g);
      REQUIRE(aut.order_exact);
      REQUIRE_MESSAGE(aut.order == oracles::brute_aut_count(g), "edge mask ", mask);
    }
  }

  TEST_CASE("order matches brute force on every 3-vertex digraph") {
    for (uint32_t mask = 0; mask < (1u << 6); ++mask) {
      std::vector<Edge> all = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
      std::vector<Edge> edges;
      for (size_t p = 0; p < all.size(); ++p)
        if (mask & (1u << p)) edges.push_back(all[p]);
      Graph g(kDirected, 3, edges);
      REQUIRE(automorphisms(g).order == oracles::brute_aut_count(g));
    }
  }

  TEST_CASE("directed graphs keep arc directions") {
    Graph triangle = make_graph(kDirected, 3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(automorphisms(triangle).order == 3);
    CHECK(automorphisms(star(3, StarOrientation::Out)).order == 6);
  }

  TEST_CASE("looped vertices map to looped vertices") {
    Graph g = make_graph(kDirectedLoops, 2, {{0, 1}, {1, 0}, {0, 0}});
    CHECK(automorphisms(g).order == 1);
    Graph both = make_graph(kDirectedLoops, 2, {{0, 1}, {1, 0}, {0, 0}, {1, 1}});
    CHECK(automorphisms(both).order == 2);
  }

  TEST_CASE("generators preserve adjacency both ways") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 15; ++iter) {
      Graph g = oracles::random_graph(rng, 7, 0.4, iter % 2 ? kDirected : kUndirected);
      AutResult aut = automorphisms(g);
      for (const Perm& p : aut.generators) {
        for (int u = 0; u < g.vertex_count(); ++u)
          for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(g.has_edge(u, v) == g.has_edge(p(u), p(v)));
        CHECK_NOTHROW(edge_perm(g, p));  // edges map to edges bijectively
      }
    }
  }

  TEST_CASE("orbits refine the degree partition") {
    std::mt19937 rng(47);
    for (int iter = 0; iter < 15; ++iter) {
      Graph g = oracles::random_graph(rng, 8, 0.4, iter % 2 ? kDirected : kUndirected);
      AutResult aut = automorphisms(g);
      for (const auto& cls : aut.vertex_orbits.classes)
        for (int v : cls) {
          CHECK(g.out_degree(v) == g.out_degree(cls[0]));
          CHECK(g.in_degree(v) == g.in_degree(cls[0]));
        }
    }
  }

  TEST_CASE("transitivity queries") {
    CHECK(is_vertex_transitive(cycle(6)));
    CHECK(is_edge_transitive(cycle(6)));
    CHECK_FALSE(is_vertex_transitive(path(2)));
    CHECK(is_edge_transitive(complete_bipartite(2, 3)));
    CHECK_FALSE(is_vertex_transitive(complete_bipartite(2, 3)));
    CHECK(is_edge_transitive(make_graph(kUndirected, 3, {})));  // vacuous
  }

  TEST_CASE("vertex cap rejects oversized graphs") {
    CHECK(oracles::error_code_of([] { automorphisms(complete(65)); }) == ErrorCode::TooLarge);
  }

  TEST_CASE("generator lists are sorted and reduced") {
    AutResult aut = automorphisms(complete(4));
    CHECK(std::is_sorted(aut.generators.begin(), aut.generators.end()));
    CHECK(aut.generators.size() <= 6);  // far fewer than 24 group elements
  }
}
