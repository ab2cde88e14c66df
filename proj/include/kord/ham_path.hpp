#pragma once

#include <vector>

#include "kord/tree.hpp"

namespace kord {

// Hamiltonian path of the cube of a tree from v1 to v2 (v1 != v2 unless the
// tree is a single vertex).  Consecutive vertices are at tree distance <= 3.
std::vector<int> ham_path_cube(const Tree& t, int v1, int v2);

// Hamiltonian path of the cube of t minus the member `removed`, built by
// chaining the components of t - removed.  w1 starts the path at tree
// distance 1 from `removed`; w2 ends it at tree distance <= 2.
struct PuncturedPath {
  std::vector<int> path;
  int w1;
  int w2;
};

PuncturedPath ham_path_minus_root(const Tree& t, int removed);

}  // namespace kord
