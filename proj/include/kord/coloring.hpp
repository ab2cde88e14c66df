#pragma once

#include <vector>

#include "kord/tree.hpp"

namespace kord {

// Equitable-reach coloring of a tree with colors 1..t.  For every member x:
//  (a) {x} and its t-1 witnesses awit[x] carry all t colors, with the i-th
//      witness at tree distance <= i (so any color != color[x] is reachable
//      within t-1, and any color within t);
//  (b) whenever x's color class has a second member, bt[x] names one at
//      distance <= t.
// Vectors are indexed by universe vertex id; non-members hold 0 / -1 / {}.
struct ColorMap {
  int t = 0;
  std::vector<int> color;              // 1..t for members, 0 otherwise
  std::vector<std::vector<int>> awit;  // t-1 witnesses, nearest first
  std::vector<int> bt;                 // same-color partner or -1
  std::vector<int> order_index;        // construction rank, -1 for non-members
};

// Builds the coloring by seeding the first t vertices in BFS order with the
// t distinct colors and growing the rest one BFS step at a time.  Throws
// invariant_violation if the finished map fails its own (a)/(b) audit.
ColorMap build_color_map(const Tree& tree, int t);

// Walk from x to z whose interior vertices all have color c, each hop a tree
// distance <= cm.t, tightened to cm.t - 1 for a hop leaving an endpoint
// whose color differs from c.  For c beyond cm.t the walk degenerates to the
// direct pair.  Falls back to a BFS search over {x, z} and the color class
// when the recursive construction misbehaves; throws invariant_violation if
// no valid walk exists at all.
std::vector<int> colored_walk(const Tree& tree, const ColorMap& cm, int x,
                              int z, int c);

}  // namespace kord
