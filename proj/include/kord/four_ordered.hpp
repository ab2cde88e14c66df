#pragma once

#include <vector>

#include "kord/certificate.hpp"
#include "kord/graph.hpp"
#include "kord/ordered_cycle.hpp"
#include "kord/tree.hpp"

namespace kord {

// Shape of a tree whose leaves all lie among four requested anchors.  The
// order field carries the anchor sequence rotated/reflected into the
// canonical frame each builder expects; reflection is sound because cyclic
// order is direction-free.
enum class ShapeKind {
  two_leaf_path,     // the tree is a path
  three_leaf_side,   // fourth anchor between the junction and order[0]
  three_leaf_middle, // fourth anchor between the junction and order[1]
  four_leaf_paired,  // order[0],order[1] share a junction
  four_leaf_crossed  // order[0],order[2] share a junction
};

struct TreeShape {
  ShapeKind kind;
  std::vector<int> order;
  bool reflected = false;
  int v0 = -1;  // junction of a three-leaf tree
  int u0 = -1;  // junction hosting order[0] in a four-leaf tree
  int um = -1;  // the opposite junction (== u0 when it has degree 4)
};

// Requires every leaf of tbar to be one of the four distinct anchors.
TreeShape classify_shape(const Tree& tbar, const std::vector<int>& anchors);

// Hamiltonian cycle of tbar^4 visiting shape.order in cyclic order and
// satisfying the leaf rule below; self-checks before returning.
std::vector<int> tbar_cycle(const Tree& tbar, const TreeShape& shape);

// Full audit of a candidate: Hamiltonian on tbar, hops <= 4, anchors in
// cyclic order (either direction), and every leaf has a cycle neighbor
// within 2, or a non-leaf one at exactly 3.
bool check_tbar_cycle(const Tree& tbar, const std::vector<int>& anchors,
                      const std::vector<int>& cycle);

// Hamiltonian cycle of g^4 through four anchors in order, built on the
// Steiner subtree of a spanning tree and extended to the whole graph.
CycleCertificate four_ordered_hamiltonian(const Graph& g,
                                          const std::vector<int>& anchors);

}  // namespace kord
