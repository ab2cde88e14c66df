#pragma once

#include <vector>

namespace kord {

// A cycle given as its vertex list (closing edge implied) together with the
// anchor sequence it visits in cyclic order.
struct OrderedCycle {
  std::vector<int> cycle;
  std::vector<int> anchors;
};

// True when the anchors appear along the cycle in the given cyclic order,
// traversed in either direction.
inline bool anchors_in_cyclic_order(const std::vector<int>& cycle,
                                    const std::vector<int>& anchors) {
  int n = static_cast<int>(cycle.size());
  std::vector<int> pos(anchors.size(), -1);
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (int j = 0; j < n; ++j)
      if (cycle[j] == anchors[i]) {
        pos[i] = j;
        break;
      }
    if (pos[i] == -1) return false;
  }
  bool fwd = true, bwd = true;
  for (std::size_t i = 1; i < pos.size(); ++i) {
    int rf = (pos[i] - pos[0] + n) % n;
    int rp = (pos[i - 1] - pos[0] + n) % n;
    if (i == 1 ? rf == 0 : rf <= rp) fwd = false;
    int bf = (pos[0] - pos[i] + n) % n;
    int bp = (pos[0] - pos[i - 1] + n) % n;
    if (i == 1 ? bf == 0 : bf <= bp) bwd = false;
  }
  return fwd || bwd;
}

}  // namespace kord
