#pragma once

#include <mutex>
#include <utility>
#include <vector>

namespace kord {

inline constexpr int unreachable_dist = -1;

// Simple undirected graph on vertices 0..n-1.  Adjacency lists are kept
// sorted ascending; parallel edges and self-loops are rejected.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;

 private:
  void check_vertex(int v) const;
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// BFS distances from src; unreachable vertices get unreachable_dist.
std::vector<int> bfs_distances(const Graph& g, int src);

// The p-th power of g: edges between distinct vertices at distance <= p.
Graph power(const Graph& g, int p);

// Lazily computed all-pairs distances for one fixed graph.  Rows are filled
// on first use; safe to share across threads.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);
  int dist(int u, int v) const;
  const std::vector<int>& row(int u) const;

 private:
  const Graph& g_;
  mutable std::vector<std::vector<int>> rows_;
  mutable std::mutex mu_;
};

}  // namespace kord
