#include "kord/graph.hpp"

#include <algorithm>
#include <queue>

#include "kord/errors.hpp"

namespace kord {

Graph::Graph(int n) {
  require_arg(n >= 1, "graph needs at least one vertex");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  require_arg(v >= 0 && v < n(), "vertex out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  require_arg(u != v, "self-loops not allowed");
  require_arg(!has_edge(u, v), "duplicate edge");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::connected() const {
  auto d = bfs_distances(*this, 0);
  return std::find(d.begin(), d.end(), unreachable_dist) == d.end();
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  require_arg(src >= 0 && src < g.n(), "vertex out of range");
  std::vector<int> dist(g.n(), unreachable_dist);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] == unreachable_dist) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

Graph power(const Graph& g, int p) {
  require_arg(p >= 1, "power must be positive");
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    auto d = bfs_distances(g, u);
    for (int v = u + 1; v < g.n(); ++v)
      if (d[v] != unreachable_dist && d[v] <= p) h.add_edge(u, v);
  }
  return h;
}

DistanceTable::DistanceTable(const Graph& g) : g_(g), rows_(g.n()) {}

const std::vector<int>& DistanceTable::row(int u) const {
  require_arg(u >= 0 && u < g_.n(), "vertex out of range");
  std::lock_guard<std::mutex> lock(mu_);
  if (rows_[u].empty()) rows_[u] = bfs_distances(g_, u);
  return rows_[u];
}

int DistanceTable::dist(int u, int v) const {
  return row(u)[v];
}

}  // namespace kord
