#pragma once

#include <utility>
#include <vector>

#include "kord/graph.hpp"

namespace kord {

// Rooted tree on a subset of the vertices 0..universe-1 of some host graph.
// Keeping the host labels means a subtree of a tree can be handled with the
// same machinery (distances inside a subtree equal distances in the host).
class Tree {
 public:
  Tree(int universe, const std::vector<int>& members,
       const std::vector<std::pair<int, int>>& edges, int root);

  // BFS spanning tree of a connected graph, rooted at 0; children of every
  // vertex are visited in ascending order.
  static Tree spanning(const Graph& g);

  int universe() const { return static_cast<int>(parent_.size()); }
  int size() const { return static_cast<int>(verts_.size()); }
  int root() const { return root_; }
  bool contains(int v) const;
  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int parent(int v) const;
  int depth(int v) const;
  bool is_leaf(int v) const;

  // Vertices of degree <= 1 ascending; a single-vertex tree reports its root.
  std::vector<int> leaves() const;

  // Unique path between two members, endpoints included.
  std::vector<int> path(int u, int v) const;
  int distance(int u, int v) const;

  // Connected components of the tree minus one member, each as a sorted
  // vertex list; components ordered by their smallest vertex.
  std::vector<std::vector<int>> components_without(int v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  // Subtree induced by a member set that must be connected in the tree;
  // rooted at its member closest to this tree's root.
  Tree induced(const std::vector<int>& members) const;

 private:
  Tree() = default;
  void check_member(int v) const;
  std::vector<int> verts_;                // sorted members
  std::vector<std::vector<int>> adj_;     // indexed by host label
  std::vector<int> parent_;               // root -> itself, non-member -> -1
  std::vector<int> depth_;                // non-member -> -1
  int root_ = -1;
};

Tree spanning_tree(const Graph& g);

// Smallest subtree of t containing all of s (s non-empty).
Tree steiner_subtree(const Tree& t, const std::vector<int>& s);

std::vector<int> tree_path(const Tree& t, int u, int v);
std::vector<int> leaves(const Tree& t);

}  // namespace kord
