#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "kord/graph.hpp"

// Checkers re-derived from first principles so library results are judged
// against independent code, not against the library itself.
namespace kordtest {

inline std::vector<std::vector<int>> dist_matrix(const kord::Graph& g) {
  int n = g.n();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (d[s][v] == -1) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

// The cycle lists each of 0..n-1 exactly once.
inline bool is_permutation_cycle(const std::vector<int>& cycle, int n) {
  if (static_cast<int>(cycle.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Every cyclically consecutive pair within distance p.
inline bool hops_within(const std::vector<std::vector<int>>& d,
                        const std::vector<int>& cycle, int p) {
  int m = static_cast<int>(cycle.size());
  for (int i = 0; i < m; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % m];
    if (d[a][b] < 0 || d[a][b] > p) return false;
  }
  return true;
}

// Anchors appear exactly once each, in the given cyclic order up to
// direction.
inline bool cyclic_order_ok(const std::vector<int>& cycle,
                            const std::vector<int>& anchors) {
  int n = static_cast<int>(cycle.size());
  int k = static_cast<int>(anchors.size());
  std::vector<int> pos;
  for (int a : anchors) {
    int count = 0, at = -1;
    for (int i = 0; i < n; ++i)
      if (cycle[i] == a) {
        ++count;
        at = i;
      }
    if (count != 1) return false;
    pos.push_back(at);
  }
  for (int dir : {1, -1}) {
    bool ok = true;
    int prev = 0;
    for (int i = 1; i < k && ok; ++i) {
      int delta = (((pos[i] - pos[0]) * dir) % n + n) % n;
      if (delta <= prev) ok = false;
      prev = delta;
    }
    if (ok) return true;
  }
  return false;
}

// All labeled trees on n >= 1 vertices, by running through every Prufer
// sequence, as sorted edge lists.
inline std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  if (n == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  int len = n - 2;
  std::vector<int> code(len, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int d : code) ++degree[d];
    std::set<int> leaf_pool;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaf_pool.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int d : code) {
      int leaf = *leaf_pool.begin();
      leaf_pool.erase(leaf_pool.begin());
      edges.emplace_back(std::min(leaf, d), std::max(leaf, d));
      if (--degree[d] == 1) leaf_pool.insert(d);
    }
    int a = *leaf_pool.begin();
    leaf_pool.erase(leaf_pool.begin());
    int b = *leaf_pool.begin();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(edges.begin(), edges.end());
    out.push_back(edges);

    int i = 0;
    while (i < len && code[i] == n - 1) code[i++] = 0;
    if (i == len) break;
    ++code[i];
  }
  return out;
}

}  // namespace kordtest
