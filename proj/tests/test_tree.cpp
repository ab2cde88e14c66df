#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "checkers.hpp"
#include "kord/graph_gen.hpp"
#include "kord/tree.hpp"

using kord::Tree;

namespace {

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges,
               int root = 0) {
  std::vector<int> members(n);
  for (int i = 0; i < n; ++i) members[i] = i;
  return Tree(n, members, edges, root);
}

}  // namespace

TEST_CASE("spanning tree is bfs from 0 with ascending neighbors") {
  Tree t = kord::spanning_tree(kord::cycle_graph(4));
  CHECK(t.root() == 0);
  CHECK(t.edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(t.parent(2) == 1);
  CHECK(t.parent(0) == 0);
  CHECK(t.depth(3) == 1);
  CHECK(t.depth(2) == 2);
}

TEST_CASE("path distance and leaves") {
  Tree t = make_tree(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  CHECK(t.path(1, 4) == std::vector<int>{1, 0, 3, 4});
  CHECK(t.path(4, 1) == std::vector<int>{4, 3, 0, 1});
  CHECK(t.path(2, 2) == std::vector<int>{2});
  CHECK(t.distance(2, 4) == 3);
  CHECK(t.leaves() == std::vector<int>{1, 2, 4});
  CHECK(t.is_leaf(4));
  CHECK_FALSE(t.is_leaf(3));
  CHECK(t.degree(0) == 3);
}

TEST_CASE("components without a vertex") {
  Tree t = make_tree(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  CHECK(t.components_without(0) ==
        std::vector<std::vector<int>>{{1}, {2}, {3, 4}});
  CHECK(t.components_without(3) == std::vector<std::vector<int>>{{0, 1, 2}, {4}});
  CHECK(t.components_without(4) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("induced subtree keeps host labels") {
  Tree t = make_tree(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  Tree sub = t.induced({0, 3, 4});
  CHECK(sub.size() == 3);
  CHECK(sub.universe() == 5);
  CHECK(sub.root() == 0);
  CHECK(sub.path(0, 4) == std::vector<int>{0, 3, 4});
  CHECK_FALSE(sub.contains(1));
  CHECK(sub.leaves() == std::vector<int>{0, 4});
}

TEST_CASE("rejects malformed trees") {
  std::vector<int> members{0, 1, 2};
  CHECK_THROWS_AS(Tree(3, members, {{0, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, members, {{0, 1}, {1, 2}, {0, 2}}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, members, {{0, 1}, {1, 2}}, 5),
                  std::invalid_argument);
}

TEST_CASE("steiner subtree equals the union of pairwise paths") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 5 + static_cast<int>(seed % 9);
    Tree t = kord::spanning_tree(kord::random_tree(n, seed));
    std::vector<int> anchors{0, n / 2, n - 1};
    if (anchors[1] == anchors[0]) anchors[1] = 1;
    Tree st = kord::steiner_subtree(t, anchors);
    std::set<int> expect;
    for (int a : anchors)
      for (int b : anchors)
        for (int v : t.path(a, b)) expect.insert(v);
    std::set<int> got(st.vertices().begin(), st.vertices().end());
    CHECK(got == expect);
    for (int a : anchors) CHECK(st.contains(a));
    // distances inside the subtree match the host tree
    for (int u : st.vertices())
      for (int v : st.vertices()) CHECK(st.distance(u, v) == t.distance(u, v));
  }
}

TEST_CASE("tree path free function matches the member") {
  Tree t = make_tree(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(kord::tree_path(t, 0, 3) == t.path(0, 3));
  CHECK(kord::leaves(t) == t.leaves());
}
