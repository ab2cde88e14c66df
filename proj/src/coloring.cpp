#include "kord/coloring.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "kord/errors.hpp"

namespace kord {

namespace {

// Members in BFS order from the tree root, neighbors visited ascending.
std::vector<int> bfs_order(const Tree& tree) {
  std::vector<int> order;
  order.reserve(tree.size());
  std::vector<char> seen(tree.universe(), 0);
  std::queue<int> q;
  q.push(tree.root());
  seen[tree.root()] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : tree.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return order;
}

void audit(const Tree& tree, const ColorMap& cm) {
  std::vector<int> class_size(cm.t + 1, 0);
  for (int v : tree.vertices()) ++class_size[cm.color[v]];
  std::vector<char> hit(cm.t + 1, 0);
  for (int v : tree.vertices()) {
    const auto& wit = cm.awit[v];
    require_invariant(static_cast<int>(wit.size()) == cm.t - 1,
                      "color map: witness list has wrong length");
    std::fill(hit.begin(), hit.end(), 0);
    hit[cm.color[v]] = 1;
    for (int i = 0; i < cm.t - 1; ++i) {
      int w = wit[i];
      require_invariant(tree.contains(w) && w != v,
                        "color map: witness outside tree");
      require_invariant(tree.distance(v, w) <= i + 1,
                        "color map: witness too far");
      require_invariant(!hit[cm.color[w]], "color map: witness color repeats");
      hit[cm.color[w]] = 1;
    }
    for (int c = 1; c <= cm.t; ++c)
      require_invariant(hit[c], "color map: witness colors incomplete");
    if (class_size[cm.color[v]] >= 2) {
      int p = cm.bt[v];
      require_invariant(p != -1 && p != v && tree.contains(p) &&
                            cm.color[p] == cm.color[v] &&
                            tree.distance(v, p) <= cm.t,
                        "color map: same-color partner invalid");
    }
  }
}

// Hop allowance: full t, minus one when the hop touches a walk endpoint
// whose color differs from the walk color.
int hop_bound(const ColorMap& cm, int x, int z, int c, int u, int v) {
  bool tight = ((u == x || u == z) && cm.color[u] != c) ||
               ((v == x || v == z) && cm.color[v] != c);
  return tight ? cm.t - 1 : cm.t;
}

bool walk_valid(const Tree& tree, const ColorMap& cm, int x, int z, int c,
                const std::vector<int>& walk) {
  if (walk.size() < 2 || walk.front() != x || walk.back() != z) return false;
  std::vector<char> used(tree.universe(), 0);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int v = walk[i];
    if (v < 0 || v >= tree.universe() || !tree.contains(v)) return false;
    if (used[v]) return false;
    used[v] = 1;
    if (i > 0 && i + 1 < walk.size() && cm.color[v] != c) return false;
    if (i > 0 && tree.distance(walk[i - 1], v) >
                     hop_bound(cm, x, z, c, walk[i - 1], v))
      return false;
  }
  return true;
}

// Peels the later-constructed endpoint toward its color-c witness until both
// ends sit inside the seed set or the witness meets the other endpoint.
std::vector<int> build_walk(const ColorMap& cm, int x, int z, int c) {
  if (c > cm.t) return {x, z};
  if (cm.order_index[x] < cm.t && cm.order_index[z] < cm.t) return {x, z};

  int later = cm.order_index[x] > cm.order_index[z] ? x : z;
  int other = later == x ? z : x;

  int w = -1;
  if (cm.color[later] == c) {
    w = cm.bt[later];
  } else {
    for (int cand : cm.awit[later])
      if (cm.color[cand] == c) {
        w = cand;
        break;
      }
  }
  // A lone color class (w == -1) forces the direct hop; property (a) of the
  // other endpoint keeps it within range.
  if (w == -1 || w == other) return {x, z};

  auto inner = later == z ? build_walk(cm, x, w, c) : build_walk(cm, w, z, c);
  if (later == z)
    inner.push_back(z);
  else
    inner.insert(inner.begin(), x);
  return inner;
}

// Exhaustive shortest walk over {x, z} and the color class, honoring the
// hop allowance; empty when none exists.
std::vector<int> fallback_walk(const Tree& tree, const ColorMap& cm, int x,
                               int z, int c) {
  std::vector<int> nodes{x, z};
  for (int v : tree.vertices())
    if (v != x && v != z && cm.color[v] == c) nodes.push_back(v);

  std::vector<int> prev(tree.universe(), -1);
  std::vector<char> seen(tree.universe(), 0);
  std::queue<int> q;
  q.push(x);
  seen[x] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == z) break;
    for (int v : nodes) {
      if (seen[v]) continue;
      if (tree.distance(u, v) > hop_bound(cm, x, z, c, u, v)) continue;
      seen[v] = 1;
      prev[v] = u;
      q.push(v);
    }
  }
  if (!seen[z]) return {};
  std::vector<int> walk;
  for (int v = z; v != -1; v = prev[v]) walk.push_back(v);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace

ColorMap build_color_map(const Tree& tree, int t) {
  require_arg(t >= 1, "color count must be positive");
  require_arg(tree.size() >= t, "tree smaller than color count");

  ColorMap cm;
  cm.t = t;
  cm.color.assign(tree.universe(), 0);
  cm.awit.assign(tree.universe(), {});
  cm.bt.assign(tree.universe(), -1);
  cm.order_index.assign(tree.universe(), -1);

  auto order = bfs_order(tree);
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    cm.order_index[order[i]] = i;

  // Seed block: the first t vertices get the t distinct colors, witnessed by
  // the remaining seeds sorted nearest-first.
  for (int i = 0; i < t; ++i) cm.color[order[i]] = i + 1;
  for (int i = 0; i < t; ++i) {
    int x = order[i];
    std::vector<std::pair<int, int>> by_dist;
    for (int j = 0; j < t; ++j)
      if (j != i) by_dist.emplace_back(tree.distance(x, order[j]), order[j]);
    std::sort(by_dist.begin(), by_dist.end());
    for (auto& [d, v] : by_dist) cm.awit[x].push_back(v);
  }

  std::vector<int> class_size(t + 1, 0);
  for (int i = 0; i < t; ++i) class_size[i + 1] = 1;

  // Growth: each later vertex copies the color of its parent's farthest
  // witness and keeps the rest, shifted one step out.
  for (int i = t; i < static_cast<int>(order.size()); ++i) {
    int x = order[i];
    int y = tree.parent(x);
    int src = t >= 2 ? cm.awit[y][t - 2] : y;
    if (t >= 2) {
      cm.awit[x].push_back(y);
      for (int j = 0; j + 2 < t; ++j) cm.awit[x].push_back(cm.awit[y][j]);
    }
    cm.color[x] = cm.color[src];
    cm.bt[x] = src;
    if (++class_size[cm.color[x]] == 2) cm.bt[src] = x;
  }

  audit(tree, cm);
  return cm;
}

std::vector<int> colored_walk(const Tree& tree, const ColorMap& cm, int x,
                              int z, int c) {
  require_arg(tree.contains(x) && tree.contains(z), "endpoint not in tree");
  require_arg(x != z, "endpoints must differ");
  require_arg(c >= 1, "color must be positive");

  auto walk = build_walk(cm, x, z, c);
  if (walk_valid(tree, cm, x, z, c, walk)) return walk;
  walk = fallback_walk(tree, cm, x, z, c);
  require_invariant(walk_valid(tree, cm, x, z, c, walk),
                    "no colored walk connects the endpoints");
  return walk;
}

}  // namespace kord
