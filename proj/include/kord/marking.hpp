#pragma once

#include <vector>

namespace kord {

enum class MarkMode { path, color };

// Label assignment for a sequence of k >= 3 anchors.  An anchor keeps its
// own key as label when marked; unmarked anchors receive fresh values drawn
// ascending from the complement of S, so all labels end up pairwise
// distinct and no unmarked label collides with any anchor key.
struct Marking {
  std::vector<int> values;   // key per anchor: residue mod t or color
  std::vector<char> marked;  // 1 when the anchor keeps its key
  std::vector<int> S;        // distinct keys over all anchors, ascending
  int u = 0;                 // number of unmarked anchors
  std::vector<int> labels;   // final label per anchor
};

// Path mode: keys are distinct positive path labels, t = floor(3k/2) - 1,
// keys enter as residues mod t and the extreme-label holders join last.
// Color mode: keys are colors in 1..t, t = floor(3k/2), and an anchor is
// marked exactly when its color is unique among the anchors.
Marking mark_anchors(const std::vector<int>& keys, MarkMode mode, int t);

}  // namespace kord
