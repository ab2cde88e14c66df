#include <doctest.h>

#include <set>

#include "checkers.hpp"
#include "kord/ham_path.hpp"

using kord::Tree;

namespace {

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> members(n);
  for (int i = 0; i < n; ++i) members[i] = i;
  return Tree(n, members, edges, 0);
}

void check_cube_path(const Tree& t, const std::vector<int>& path, int v1,
                     int v2) {
  REQUIRE(static_cast<int>(path.size()) == t.size());
  std::set<int> seen(path.begin(), path.end());
  REQUIRE(static_cast<int>(seen.size()) == t.size());
  for (int v : path) REQUIRE(t.contains(v));
  REQUIRE(path.front() == v1);
  REQUIRE(path.back() == v2);
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    REQUIRE(t.distance(path[i], path[i + 1]) <= 3);
}

}  // namespace

TEST_CASE("cube path on every labeled tree up to six vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& edges : kordtest::all_labeled_trees(n)) {
      Tree t = make_tree(n, edges);
      for (int v1 = 0; v1 < n; ++v1)
        for (int v2 = 0; v2 < n; ++v2) {
          if (v1 == v2) continue;
          check_cube_path(t, kord::ham_path_cube(t, v1, v2), v1, v2);
        }
    }
  }
}

TEST_CASE("cube path degenerate cases") {
  Tree one = make_tree(1, {});
  CHECK(kord::ham_path_cube(one, 0, 0) == std::vector<int>{0});
  Tree two = make_tree(2, {{0, 1}});
  CHECK(kord::ham_path_cube(two, 1, 0) == std::vector<int>{1, 0});
  CHECK_THROWS_AS(kord::ham_path_cube(two, 1, 1), std::invalid_argument);
}

TEST_CASE("punctured path starts beside the removed vertex") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& edges : kordtest::all_labeled_trees(n)) {
      Tree t = make_tree(n, edges);
      for (int removed = 0; removed < n; ++removed) {
        kord::PuncturedPath pp = kord::ham_path_minus_root(t, removed);
        REQUIRE(static_cast<int>(pp.path.size()) == n - 1);
        std::set<int> seen(pp.path.begin(), pp.path.end());
        REQUIRE(static_cast<int>(seen.size()) == n - 1);
        REQUIRE(seen.count(removed) == 0);
        REQUIRE(pp.w1 == pp.path.front());
        REQUIRE(pp.w2 == pp.path.back());
        REQUIRE(t.distance(removed, pp.w1) == 1);
        REQUIRE(t.distance(removed, pp.w2) <= 2);
        for (std::size_t i = 0; i + 1 < pp.path.size(); ++i)
          REQUIRE(t.distance(pp.path[i], pp.path[i + 1]) <= 3);
      }
    }
  }
}
