#include "kord/ham_path.hpp"

#include <algorithm>

#include "kord/errors.hpp"

namespace kord {
namespace {

// Recursive construction: split the tree at the first edge of the v1-v2
// path, solve both halves, and concatenate.  The connecting hop crosses one
// tree edge plus at most one edge on each side, hence distance <= 3.
std::vector<int> ham_path_rec(const Tree& t, int v1, int v2) {
  if (t.size() == 1) return {v1};
  if (t.size() == 2) return {v1, v2};

  auto p = t.path(v1, v2);
  int w1 = p[0];  // == v1
  int w2 = p[1];

  // Split along edge (w1, w2): the component of w2 after removing w1 is T2,
  // everything else is T1.
  std::vector<char> in2(t.universe(), 0);
  for (const auto& comp : t.components_without(w1)) {
    if (std::binary_search(comp.begin(), comp.end(), w2)) {
      for (int v : comp) in2[v] = 1;
      break;
    }
  }
  std::vector<int> m1, m2;
  for (int v : t.vertices()) (in2[v] ? m2 : m1).push_back(v);

  Tree t1 = t.induced(m1);
  Tree t2 = t.induced(m2);

  // Exit vertex of T1: v1 itself when T1 is trivial, otherwise one of its
  // tree neighbors, so the hop u1 -> u2 spans <= 3 tree edges.
  int u1 = v1;
  if (t1.size() > 1) u1 = t1.neighbors(w1).front();
  // Entry vertex of T2: w2 itself unless w2 is already the target endpoint
  // of a non-trivial T2 (then enter through a neighbor instead).
  int u2 = w2;
  if (w2 == v2 && t2.size() > 1) u2 = t2.neighbors(w2).front();

  auto left = ham_path_rec(t1, v1, u1);
  auto right = ham_path_rec(t2, u2, v2);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

std::vector<int> ham_path_cube(const Tree& t, int v1, int v2) {
  require_arg(t.contains(v1) && t.contains(v2), "endpoint not in tree");
  if (t.size() == 1) {
    require_arg(v1 == v2, "endpoint not in tree");
    return {v1};
  }
  require_arg(v1 != v2, "endpoints must differ");
  auto path = ham_path_rec(t, v1, v2);

  require_invariant(static_cast<int>(path.size()) == t.size(),
                    "cube path misses vertices");
  for (size_t i = 0; i + 1 < path.size(); ++i)
    require_invariant(t.distance(path[i], path[i + 1]) <= 3,
                      "cube path hop exceeds 3");
  return path;
}

PuncturedPath ham_path_minus_root(const Tree& t, int removed) {
  require_arg(t.contains(removed), "vertex not in tree");
  require_arg(t.size() >= 2, "nothing left after removal");

  std::vector<int> out;
  for (const auto& comp : t.components_without(removed)) {
    // Each component holds exactly one tree neighbor of `removed`.
    int w1 = -1;
    for (int v : t.neighbors(removed))
      if (std::binary_search(comp.begin(), comp.end(), v)) {
        require_invariant(w1 == -1, "component touches root twice");
        w1 = v;
      }
    require_invariant(w1 != -1, "component misses the root");

    Tree sub = t.induced(comp);
    int w2 = w1;
    if (sub.size() > 1) w2 = sub.neighbors(w1).front();
    auto piece = ham_path_cube(sub, w1, w2);
    out.insert(out.end(), piece.begin(), piece.end());
  }

  require_invariant(static_cast<int>(out.size()) == t.size() - 1,
                    "path misses vertices");
  require_invariant(t.distance(out.front(), removed) == 1,
                    "path must start next to the removed vertex");
  require_invariant(t.distance(out.back(), removed) <= 2,
                    "path must end near the removed vertex");
  for (size_t i = 0; i + 1 < out.size(); ++i)
    require_invariant(t.distance(out[i], out[i + 1]) <= 3,
                      "path hop exceeds 3");
  return {out, out.front(), out.back()};
}

}  // namespace kord
