#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "checkers.hpp"
#include "kord/cycle_extension.hpp"
#include "kord/errors.hpp"
#include "kord/graph_gen.hpp"
#include "kord/tree.hpp"

using kord::OrderedCycle;
using kord::Tree;

namespace {

Tree path_tree(int n) { return kord::spanning_tree(kord::path_graph(n)); }

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges,
               int root = 0) {
  std::vector<int> members(n);
  for (int i = 0; i < n; ++i) members[i] = i;
  return Tree(n, members, edges, root);
}

void check_result(const Tree& host, int p, const OrderedCycle& oc) {
  CHECK(static_cast<int>(oc.cycle.size()) == host.size());
  std::vector<char> seen(host.universe(), 0);
  for (int v : oc.cycle) {
    CHECK(host.contains(v));
    CHECK(!seen[v]);
    seen[v] = 1;
  }
  int n = static_cast<int>(oc.cycle.size());
  for (int i = 0; i < n; ++i)
    CHECK(host.distance(oc.cycle[i], oc.cycle[(i + 1) % n]) <= p);
  CHECK(kord::anchors_in_cyclic_order(oc.cycle, oc.anchors));
}

}  // namespace

TEST_CASE("leaf rule accepts a close neighbor or a non-leaf one step out") {
  Tree t = path_tree(5);  // leaves 0 and 4
  std::vector<int> near{0, 2, 4};
  CHECK(kord::leaf_condition_ok(t, 4, near, 0));   // 2 sits within p - 2
  CHECK(kord::leaf_condition_ok(t, 3, near, 0));   // 2 at p - 1 is no leaf
  CHECK(kord::leaf_condition_ok(t, 3, near, 4));
  std::vector<int> far{0, 3, 4};
  CHECK(kord::leaf_condition_ok(t, 4, far, 0));    // 3 at p - 1 is no leaf
  CHECK_FALSE(kord::leaf_condition_ok(t, 3, far, 0));  // 3 and 4 both too far
  CHECK(kord::leaf_condition_ok(t, 3, far, 4));
  std::vector<int> absent{1, 2, 3};
  CHECK_FALSE(kord::leaf_condition_ok(t, 4, absent, 0));
}

TEST_CASE("saturation fills a path subtree between its anchors") {
  Tree u = path_tree(5);
  OrderedCycle oc{{0, 2, 4}, {0, 2, 4}};
  OrderedCycle sat = kord::saturate_subtree(u, 4, oc);
  CHECK(sat.cycle == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(sat.anchors == std::vector<int>{0, 2, 4});
  check_result(u, 4, sat);
}

TEST_CASE("saturation pulls the center of a star into a leaf cycle") {
  Tree u = make_tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  OrderedCycle oc{{1, 2, 3, 4}, {1, 2, 3, 4}};
  OrderedCycle sat = kord::saturate_subtree(u, 4, oc);
  CHECK(sat.cycle == std::vector<int>{1, 0, 2, 3, 4});
  check_result(u, 4, sat);
  // At power 3 every cycle neighbor of a star leaf is a leaf two steps out.
  CHECK_THROWS_AS(kord::saturate_subtree(u, 3, oc), std::invalid_argument);
}

TEST_CASE("saturation validates its input cycle") {
  Tree u = path_tree(5);
  CHECK_THROWS_AS(kord::saturate_subtree(u, 2, {{0, 2, 4}, {0, 2, 4}}),
                  std::invalid_argument);  // power too small
  CHECK_THROWS_AS(kord::saturate_subtree(u, 4, {{0, 2, 3}, {0, 2, 3}}),
                  std::invalid_argument);  // leaf 4 missing
  CHECK_THROWS_AS(kord::saturate_subtree(u, 3, {{0, 4, 2}, {0, 4, 2}}),
                  std::invalid_argument);  // hop 0-4 exceeds the power
  CHECK_THROWS_AS(kord::saturate_subtree(u, 4, {{0, 2, 2}, {0, 2, 2}}),
                  std::invalid_argument);  // repeated cycle vertex
  CHECK_THROWS_AS(
      kord::saturate_subtree(u, 4, {{0, 2, 3, 4}, {0, 3, 2, 4}}),
      std::invalid_argument);  // anchors out of cyclic order
}

TEST_CASE("attachment absorbs a pendant behind a subtree leaf") {
  Tree t = path_tree(6);
  Tree u = kord::steiner_subtree(t, {0, 2, 4});
  OrderedCycle sat = kord::saturate_subtree(u, 4, {{0, 2, 4}, {0, 2, 4}});
  OrderedCycle full = kord::attach_components(t, u, 4, sat);
  CHECK(full.cycle == std::vector<int>{0, 1, 2, 3, 5, 4});
  CHECK(full.anchors == std::vector<int>{0, 2, 4});
  check_result(t, 4, full);
}

TEST_CASE("attachment splices across an interior vertex at power four") {
  kord::Graph g = kord::Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
  Tree t = kord::spanning_tree(g);
  Tree u = kord::steiner_subtree(t, {0, 4});
  OrderedCycle sat = kord::saturate_subtree(u, 4, {{0, 2, 4}, {0, 2, 4}});
  OrderedCycle full = kord::attach_components(t, u, 4, sat);
  CHECK(full.cycle == std::vector<int>{0, 1, 2, 3, 4, 5});
  check_result(t, 4, full);
}

TEST_CASE("interior attachment refuses power three") {
  kord::Graph g =
      kord::Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  Tree t = kord::spanning_tree(g);
  Tree u = kord::steiner_subtree(t, {0, 3});
  OrderedCycle oc{{0, 1, 2, 3}, {0, 1, 3}};
  CHECK_THROWS_AS(kord::attach_components(t, u, 3, oc),
                  kord::invariant_violation);
}

TEST_CASE("attachment validates the cycle against the subtree") {
  Tree t = path_tree(6);
  Tree u = kord::steiner_subtree(t, {0, 4});
  CHECK_THROWS_AS(kord::attach_components(t, u, 4, {{0, 1, 2}, {0, 1, 2}}),
                  std::invalid_argument);  // cycle misses subtree vertices
}
