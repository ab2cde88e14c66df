#include "kord/marking.hpp"

#include <algorithm>
#include <set>

#include "kord/errors.hpp"

namespace kord {

Marking mark_anchors(const std::vector<int>& keys, MarkMode mode, int t) {
  int k = static_cast<int>(keys.size());
  require_arg(k >= 3, "need at least three anchors");
  int want = mode == MarkMode::path ? 3 * k / 2 - 1 : 3 * k / 2;
  require_arg(t == want, "t does not match the mode formula");

  Marking m;
  m.marked.assign(k, 0);
  m.values.resize(k);

  if (mode == MarkMode::path) {
    std::set<int> distinct(keys.begin(), keys.end());
    require_arg(static_cast<int>(distinct.size()) == k,
                "path labels must be distinct");
    for (int key : keys) require_arg(key >= 1, "path labels start at 1");
    for (int i = 0; i < k; ++i) m.values[i] = keys[i] % t;

    // The extreme-label anchors join the pool last; everyone else is marked
    // when their residue is unique among the early joiners.
    int lo = static_cast<int>(
        std::min_element(keys.begin(), keys.end()) - keys.begin());
    int hi = static_cast<int>(
        std::max_element(keys.begin(), keys.end()) - keys.begin());
    std::vector<int> counts(t, 0);
    for (int i = 0; i < k; ++i)
      if (i != lo && i != hi) ++counts[m.values[i]];
    for (int i = 0; i < k; ++i)
      if (i != lo && i != hi) m.marked[i] = counts[m.values[i]] == 1;
    if (counts[m.values[lo]] == 0) m.marked[lo] = 1;
    ++counts[m.values[lo]];
    if (counts[m.values[hi]] == 0) m.marked[hi] = 1;
  } else {
    for (int key : keys) require_arg(key >= 1 && key <= t, "color out of range");
    m.values = keys;
    std::vector<int> counts(t + 1, 0);
    for (int key : keys) ++counts[key];
    for (int i = 0; i < k; ++i) m.marked[i] = counts[keys[i]] == 1;
  }

  std::set<int> s_set(m.values.begin(), m.values.end());
  m.S.assign(s_set.begin(), s_set.end());
  for (int i = 0; i < k; ++i) m.u += m.marked[i] ? 0 : 1;
  require_invariant(static_cast<int>(m.S.size()) + m.u <= t,
                    "marking exceeds the label budget");

  // Fresh labels: ascending unused values to ascending unmarked anchors.
  int first = mode == MarkMode::path ? 0 : 1;
  std::vector<int> pool;
  for (int v = first; v < first + t; ++v)
    if (!s_set.count(v)) pool.push_back(v);

  m.labels.resize(k);
  std::size_t next = 0;
  for (int i = 0; i < k; ++i)
    m.labels[i] = m.marked[i] ? m.values[i] : pool[next++];

  std::set<int> label_set(m.labels.begin(), m.labels.end());
  require_invariant(static_cast<int>(label_set.size()) == k,
                    "anchor labels must be pairwise distinct");
  return m;
}

}  // namespace kord
