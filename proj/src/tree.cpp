#include "kord/tree.hpp"

#include <algorithm>
#include <queue>

#include "kord/errors.hpp"

namespace kord {

Tree::Tree(int universe, const std::vector<int>& members,
           const std::vector<std::pair<int, int>>& edges, int root) {
  require_arg(universe >= 1, "universe must be positive");
  require_arg(!members.empty(), "tree needs at least one vertex");
  verts_ = members;
  std::sort(verts_.begin(), verts_.end());
  require_arg(std::adjacent_find(verts_.begin(), verts_.end()) == verts_.end(),
              "duplicate tree vertex");
  require_arg(verts_.front() >= 0 && verts_.back() < universe,
              "tree vertex out of range");
  require_arg(static_cast<int>(edges.size()) == size() - 1,
              "tree must have exactly size-1 edges");
  adj_.resize(universe);
  parent_.assign(universe, -1);
  depth_.assign(universe, -1);
  std::vector<char> member(universe, 0);
  for (int v : verts_) member[v] = 1;
  auto in_set = [&](int v) { return v >= 0 && v < universe && member[v]; };
  for (auto [u, v] : edges) {
    require_arg(in_set(u) && in_set(v), "vertex not in tree");
    require_arg(u != v, "self-loops not allowed");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v : verts_) std::sort(adj_[v].begin(), adj_[v].end());
  require_arg(in_set(root), "vertex not in tree");
  root_ = root;

  // Root the tree; a cycle would leave some vertex unvisited (edge count is
  // n-1, so connected <=> acyclic here).
  parent_[root_] = root_;
  depth_[root_] = 0;
  std::queue<int> q;
  q.push(root_);
  int seen = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    ++seen;
    for (int v : adj_[u]) {
      if (depth_[v] == -1) {
        depth_[v] = depth_[u] + 1;
        parent_[v] = u;
        q.push(v);
      }
    }
  }
  require_arg(seen == size(), "tree edges do not connect the vertex set");
}

Tree Tree::spanning(const Graph& g) {
  require_arg(g.connected(), "graph must be connected");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> members(g.n());
  std::vector<char> visited(g.n(), 0);
  for (int i = 0; i < g.n(); ++i) members[i] = i;
  std::queue<int> q;
  visited[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {  // ascending
      if (!visited[v]) {
        visited[v] = 1;
        edges.emplace_back(u, v);
        q.push(v);
      }
    }
  }
  return Tree(g.n(), members, edges, 0);
}

void Tree::check_member(int v) const {
  require_arg(v >= 0 && v < universe() && depth_[v] != -1,
              "vertex not in tree");
}

bool Tree::contains(int v) const {
  return v >= 0 && v < universe() && depth_[v] != -1;
}

const std::vector<int>& Tree::neighbors(int v) const {
  check_member(v);
  return adj_[v];
}

int Tree::parent(int v) const {
  check_member(v);
  return parent_[v];
}

int Tree::depth(int v) const {
  check_member(v);
  return depth_[v];
}

bool Tree::is_leaf(int v) const {
  return degree(v) <= 1;
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  for (int v : verts_)
    if (degree(v) <= 1) out.push_back(v);
  return out;
}

std::vector<int> Tree::path(int u, int v) const {
  check_member(u);
  check_member(v);
  std::vector<int> front{u}, back{v};
  int a = u, b = v;
  while (a != b) {
    if (depth_[a] >= depth_[b]) {
      a = parent_[a];
      front.push_back(a);
    } else {
      b = parent_[b];
      back.push_back(b);
    }
  }
  front.pop_back();  // meeting vertex would be doubled
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

int Tree::distance(int u, int v) const {
  return static_cast<int>(path(u, v).size()) - 1;
}

std::vector<std::vector<int>> Tree::components_without(int v) const {
  check_member(v);
  std::vector<std::vector<int>> comps;
  std::vector<char> visited(universe(), 0);
  visited[v] = 1;
  for (int start : verts_) {
    if (visited[start]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    visited[start] = 1;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : adj_[u])
        if (!visited[w]) {
          visited[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // verts_ is ascending, so components already appear by smallest member.
  return comps;
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u : verts_)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree Tree::induced(const std::vector<int>& members) const {
  require_arg(!members.empty(), "tree needs at least one vertex");
  std::vector<char> in(universe(), 0);
  for (int v : members) {
    check_member(v);
    in[v] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  int best = -1;
  for (int v : members) {
    if (best == -1 || depth_[v] < depth_[best]) best = v;
    for (int w : adj_[v])
      if (v < w && in[w]) edges.emplace_back(v, w);
  }
  return Tree(universe(), members, edges, best);
}

Tree spanning_tree(const Graph& g) {
  return Tree::spanning(g);
}

Tree steiner_subtree(const Tree& t, const std::vector<int>& s) {
  require_arg(!s.empty(), "steiner set must be non-empty");
  int s0 = *std::min_element(s.begin(), s.end());
  std::vector<char> in(t.universe(), 0);
  std::vector<int> members;
  for (int v : s) {
    for (int u : t.path(s0, v)) {
      if (!in[u]) {
        in[u] = 1;
        members.push_back(u);
      }
    }
  }
  return t.induced(members);
}

std::vector<int> tree_path(const Tree& t, int u, int v) {
  return t.path(u, v);
}

std::vector<int> leaves(const Tree& t) {
  return t.leaves();
}

}  // namespace kord
