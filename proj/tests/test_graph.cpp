#include <doctest.h>

#include <stdexcept>

#include "checkers.hpp"
#include "kord/graph.hpp"
#include "kord/graph_gen.hpp"

using kord::Graph;

TEST_CASE("graph basics") {
  Graph g = Graph::from_edges(4, {{2, 1}, {0, 1}, {2, 3}});
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.degree(2) == 2);
  CHECK(g.connected());
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("graph rejects bad edges") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("disconnection is detected") {
  Graph g = Graph::from_edges(5, {{3, 4}, {0, 1}});
  CHECK_FALSE(g.connected());
  CHECK(kord::bfs_distances(g, 0)[3] == kord::unreachable_dist);
}

TEST_CASE("bfs distances on a path") {
  Graph g = kord::path_graph(6);
  CHECK(kord::bfs_distances(g, 2) == std::vector<int>{2, 1, 0, 1, 2, 3});
}

TEST_CASE("generators produce the expected shapes") {
  Graph p = kord::path_graph(4);
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  Graph c = kord::cycle_graph(4);
  CHECK(c.edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("random generators are deterministic and valid") {
  for (int n : {2, 5, 9}) {
    Graph t1 = kord::random_tree(n, 123);
    Graph t2 = kord::random_tree(n, 123);
    CHECK(t1.edges() == t2.edges());
    CHECK(t1.edge_count() == n - 1);
    CHECK(t1.connected());
    Graph t3 = kord::random_tree(n, 124);
    if (n >= 5) CHECK(t1.edges() != t3.edges());
  }
  Graph g1 = kord::random_connected(8, 12, 77);
  Graph g2 = kord::random_connected(8, 12, 77);
  CHECK(g1.edges() == g2.edges());
  CHECK(g1.edge_count() == 12);
  CHECK(g1.connected());
}

TEST_CASE("random tree seeds cover all labeled trees on four vertices") {
  auto shapes = kordtest::all_labeled_trees(4);
  CHECK(shapes.size() == 16);
  std::set<std::vector<std::pair<int, int>>> seen;
  for (std::uint64_t seed = 0; seed < 4000 && seen.size() < shapes.size();
       ++seed)
    seen.insert(kord::random_tree(4, seed).edges());
  CHECK(seen.size() == shapes.size());
  for (const auto& e : shapes) CHECK(seen.count(e) == 1);
}

TEST_CASE("power matches the distance definition") {
  for (int n : {2, 5, 7}) {
    for (int p : {1, 2, 3}) {
      int m = std::min(n * (n - 1) / 2, n + 1);
      Graph g = kord::random_connected(n, m, 7 * n + p);
      auto d = kordtest::dist_matrix(g);
      Graph gp = kord::power(g, p);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v)
            CHECK(gp.has_edge(u, v) == (d[u][v] != -1 && d[u][v] <= p));
    }
  }
}

TEST_CASE("distance table agrees with plain bfs") {
  Graph g = kord::random_connected(9, 14, 42);
  kord::DistanceTable dt(g);
  auto d = kordtest::dist_matrix(g);
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v) CHECK(dt.dist(u, v) == d[u][v]);
}

TEST_CASE("generate parses specs and rejects junk") {
  CHECK(kord::generate("path:5").edges() == kord::path_graph(5).edges());
  CHECK(kord::generate("cycle:6").edges() == kord::cycle_graph(6).edges());
  CHECK(kord::generate("rand-tree:7:3").edges() ==
        kord::random_tree(7, 3).edges());
  CHECK(kord::generate("rand-conn:7:9:3").edges() ==
        kord::random_connected(7, 9, 3).edges());
  CHECK_THROWS_AS(kord::generate("blob:4"), std::invalid_argument);
  CHECK_THROWS_AS(kord::generate("path:x"), std::invalid_argument);
  CHECK_THROWS_AS(kord::generate("path"), std::invalid_argument);
}
