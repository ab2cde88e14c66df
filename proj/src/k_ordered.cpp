#include "kord/k_ordered.hpp"

#include <algorithm>
#include <set>

#include "kord/coloring.hpp"
#include "kord/cycle_extension.hpp"
#include "kord/errors.hpp"
#include "kord/marking.hpp"
#include "kord/tree.hpp"

namespace kord {

namespace {

struct Pipeline {
  Tree t;
  Tree u;
  OrderedCycle cycle;
  int power = 0;  // floor(3k/2)
};

Pipeline run_pipeline(const Graph& g, const std::vector<int>& anchors) {
  int k = static_cast<int>(anchors.size());
  require_arg(k >= 3, "need at least three anchors");
  require_arg(g.connected(), "graph must be connected");
  std::set<int> distinct;
  for (int v : anchors) {
    require_arg(v >= 0 && v < g.n(), "anchor out of range");
    require_arg(distinct.insert(v).second, "anchors must be distinct");
  }

  int t = 3 * k / 2;
  Tree span = spanning_tree(g);
  Tree u = steiner_subtree(span, anchors);

  // The Steiner subtree can be smaller than t; walks for out-of-range
  // labels then collapse to direct hops, which its diameter keeps short.
  int t_eff = std::min(t, u.size());
  ColorMap cm = build_color_map(u, t_eff);

  std::vector<int> keys(k);
  for (int i = 0; i < k; ++i) keys[i] = cm.color[anchors[i]];
  Marking mk = mark_anchors(keys, MarkMode::color, t);

  std::vector<char> is_anchor(g.n(), 0);
  for (int v : anchors) is_anchor[v] = 1;

  OrderedCycle oc;
  oc.anchors = anchors;
  std::vector<char> used(g.n(), 0);
  for (int i = 0; i < k; ++i) {
    int from = anchors[i], to = anchors[(i + 1) % k];
    auto walk = colored_walk(u, cm, from, to, mk.labels[i]);
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
      int v = walk[j];
      require_invariant(!used[v], "walks must be internally disjoint");
      require_invariant(j == 0 || !is_anchor[v],
                        "walk interior hits an anchor");
      used[v] = 1;
      oc.cycle.push_back(v);
      require_invariant(u.distance(v, walk[j + 1]) <= t,
                        "walk hop exceeds the power");
    }
  }

  require_invariant(anchors_in_cyclic_order(oc.cycle, oc.anchors),
                    "anchors out of order on the built cycle");
  return {span, u, oc, t};
}

}  // namespace

std::pair<OrderedCycle, int> build_ordered_cycle(
    const Graph& g, const std::vector<int>& anchors) {
  auto pl = run_pipeline(g, anchors);
  return {pl.cycle, pl.power};
}

CycleCertificate ordered_hamiltonian(const Graph& g,
                                     const std::vector<int>& anchors) {
  auto pl = run_pipeline(g, anchors);
  int p = pl.power + 1;

  for (int leaf : pl.u.leaves())
    require_invariant(leaf_condition_ok(pl.u, p, pl.cycle.cycle, leaf),
                      "built cycle misses the leaf rule");

  OrderedCycle sat = saturate_subtree(pl.u, p, pl.cycle);
  OrderedCycle full = attach_components(pl.t, pl.u, p, sat);

  CycleCertificate cert;
  cert.n = g.n();
  cert.power = p;
  cert.cycle = full.cycle;
  cert.anchors = anchors;
  cert.construction = "general";
  require_invariant(static_cast<int>(cert.cycle.size()) == g.n(),
                    "certificate must cover the graph");
  return cert;
}

}  // namespace kord
