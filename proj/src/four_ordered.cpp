#include "kord/four_ordered.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "kord/cycle_extension.hpp"
#include "kord/errors.hpp"

namespace kord {

namespace {

// [q0, q2, ..., q3, q1]: Hamiltonian path of the square of a path, entering
// at q0, leaving at q1, every hop within 2.
std::vector<int> zigzag(const std::vector<int>& q) {
  int n = static_cast<int>(q.size());
  if (n <= 1) return q;
  std::vector<int> out;
  for (int i = 0; i < n; i += 2) out.push_back(q[i]);
  for (int i = (n - 1) % 2 ? n - 1 : n - 2; i >= 1; i -= 2)
    out.push_back(q[i]);
  return out;
}

std::vector<int> slice(const std::vector<int>& v, int from, int to) {
  if (from > to) return {};
  return {v.begin() + from, v.begin() + to + 1};
}

// The tree is a path; the four runs threading residue classes mod 4 get
// linked in anchor order and the two spare runs are woven back in.
std::vector<int> build_path_case(const Tree& tbar, const TreeShape& shape) {
  auto ends = tbar.leaves();
  require_arg(ends.size() == 2, "path shape needs exactly two leaves");
  std::vector<int> path = tbar.path(ends[0], ends[1]);
  int last = static_cast<int>(path.size()) - 1;
  std::vector<int> pos(tbar.universe(), -1);
  for (int i = 0; i <= last; ++i) pos[path[i]] = i;

  std::array<int, 5> p{}, w{};
  {
    std::vector<int> sorted = shape.order;
    for (int v : sorted) require_arg(pos[v] != -1, "anchor off the path");
    std::sort(sorted.begin(), sorted.end(),
              [&](int a, int b) { return pos[a] < pos[b]; });
    for (int i = 1; i <= 4; ++i) {
      w[i] = sorted[i - 1];
      p[i] = pos[w[i]];
    }
  }

  // Offsets a, b with a + b matching the middle gap mod 4, then compatible
  // alternatives c, d for the crossing runs.
  int d = p[3] - p[2];
  static const int ab[4][2] = {{1, 3}, {2, 3}, {1, 1}, {1, 2}};
  int a = ab[d % 4][0], b = ab[d % 4][1];
  int c = a == 1 ? 2 : 1;
  int dd = -1;
  for (int cand = 1; cand <= 3 && dd == -1; ++cand)
    if (cand != b && (c + cand) % 4 != d % 4) dd = cand;
  require_invariant(dd != -1, "no compatible run offset");

  int cls14 = (p[2] + a) % 4;
  int cls13 = (p[2] + c) % 4;
  int cls24 = ((p[3] - dd) % 4 + 4) % 4;

  auto run = [&](int lo, int hi, auto&& pred) {
    std::vector<int> out;
    for (int q = lo + 1; q < hi; ++q)
      if (pred(q % 4)) out.push_back(path[q]);
    return out;
  };

  std::map<std::pair<int, int>, std::vector<int>> runs;
  auto make = [&](int i, int j, std::vector<int> mid) {
    std::vector<int> r{w[i]};
    r.insert(r.end(), mid.begin(), mid.end());
    r.push_back(w[j]);
    runs[{i, j}] = std::move(r);
  };
  make(1, 4, run(p[1], p[4], [&](int m) { return m == cls14; }));
  make(1, 3, run(p[1], p[3], [&](int m) { return m == cls13; }));
  make(2, 4, run(p[2], p[4], [&](int m) { return m == cls24; }));
  make(1, 2,
       run(p[1], p[2], [&](int m) { return m != cls14 && m != cls13; }));
  make(2, 3, run(p[2], p[3], [&](int m) {
         return m != cls14 && m != cls13 && m != cls24;
       }));
  make(3, 4,
       run(p[3], p[4], [&](int m) { return m != cls14 && m != cls24; }));

  std::vector<int> widx(tbar.universe(), -1);
  for (int i = 1; i <= 4; ++i) widx[w[i]] = i;

  std::vector<int> cycle;
  for (int s = 0; s < 4; ++s) {
    int i = widx[shape.order[s]], j = widx[shape.order[(s + 1) % 4]];
    auto seg = runs[{std::min(i, j), std::max(i, j)}];
    if (i > j) std::reverse(seg.begin(), seg.end());
    cycle.insert(cycle.end(), seg.begin(), seg.end() - 1);
  }

  std::vector<char> used(tbar.universe(), 0);
  for (int v : cycle) used[v] = 1;
  for (int q = 0; q <= last; ++q) {
    int y = path[q];
    if (used[y]) continue;
    int n = static_cast<int>(cycle.size()), at = -1;
    for (int e = 0; e < n && at == -1; ++e)
      if (std::min(pos[cycle[e]], pos[cycle[(e + 1) % n]]) < q &&
          q < std::max(pos[cycle[e]], pos[cycle[(e + 1) % n]]))
        at = e;
    require_invariant(at != -1, "no edge straddles the missing vertex");
    cycle.insert(cycle.begin() + at + 1, y);
    used[y] = 1;
  }
  return cycle;
}

// Fourth anchor sits between the junction and order[0]: ride the snake
// cycle of the long path, detour through the third branch right where the
// ride passes the junction.
std::vector<int> build_side_case(const Tree& tbar, const TreeShape& shape) {
  int v1 = shape.order[0], v2 = shape.order[1], v3 = shape.order[2],
      v4 = shape.order[3], v0 = shape.v0;
  std::vector<int> path = tbar.path(v1, v2);
  int last = static_cast<int>(path.size()) - 1;
  int m0 = -1, f = -1;
  for (int i = 0; i <= last; ++i) {
    if (path[i] == v0) m0 = i;
    if (path[i] == v4) f = i;
  }
  require_arg(m0 > 0 && m0 < last, "junction must be interior");
  require_arg(f > 0 && f <= m0, "fourth anchor off the first branch");

  std::vector<int> snake = zigzag(path);
  int n = static_cast<int>(snake.size());
  int i2 = -1;
  for (int i = 0; i < n; ++i)
    if (snake[i] == v2) i2 = i;
  require_invariant(i2 != -1, "second anchor missing from the snake");

  // Choose the ride direction leaving the fourth anchor for the tail.
  std::vector<int> walk1, cont;
  if (f % 2 == 0) {
    walk1.push_back(snake[0]);
    for (int i = n - 1; i >= i2; --i) walk1.push_back(snake[i]);
    for (int i = i2 - 1; i >= 1; --i) cont.push_back(snake[i]);
  } else {
    for (int i = 0; i <= i2; ++i) walk1.push_back(snake[i]);
    for (int i = i2 + 1; i < n; ++i) cont.push_back(snake[i]);
  }

  std::vector<int> ppos(tbar.universe(), -1);
  for (int i = 0; i <= last; ++i) ppos[path[i]] = i;
  int resume = -1;
  int nc = static_cast<int>(cont.size());
  for (int i = 0; i < nc && resume == -1; ++i)
    if (ppos[cont[i]] <= m0) resume = i;
  require_invariant(resume != -1, "ride never returns to the junction");
  require_invariant(cont[resume] == v0 || cont[resume] == path[m0 - 1],
                    "detour must resume beside the junction");
  for (int i = 0; i < resume; ++i)
    require_invariant(cont[i] != v4, "fourth anchor consumed too early");

  std::vector<int> third = tbar.path(v0, v3);
  auto r3 = zigzag(slice(third, 1, static_cast<int>(third.size()) - 1));

  std::vector<int> cycle = walk1;
  cycle.insert(cycle.end(), cont.begin(), cont.begin() + resume);
  cycle.insert(cycle.end(), r3.begin(), r3.end());
  cycle.insert(cycle.end(), cont.begin() + resume, cont.end());
  return cycle;
}

// Fourth anchor sits between the junction and order[1]: residue classes
// mod 4 of the middle branch carry the walk up and down around it.
std::vector<int> build_middle_case(const Tree& tbar, const TreeShape& shape) {
  int v1 = shape.order[0], v2 = shape.order[1], v3 = shape.order[2],
      v4 = shape.order[3], v0 = shape.v0;
  std::vector<int> bt = tbar.path(v0, v1);
  std::vector<int> bu = tbar.path(v0, v2);
  std::vector<int> bw = tbar.path(v0, v3);
  int len1 = static_cast<int>(bt.size()) - 1;
  int len2 = static_cast<int>(bu.size()) - 1;
  int len3 = static_cast<int>(bw.size()) - 1;
  int f = -1;
  for (int i = 0; i <= len2; ++i)
    if (bu[i] == v4) f = i;
  require_arg(f >= 1 && f <= len2 - 1, "fourth anchor off the middle branch");

  bool route_t1 = f % 4 == 0;
  std::vector<char> used(len2 + 1, 0);
  std::vector<int> cycle{v1};
  auto take = [&](int j) {
    require_invariant(!used[j], "middle branch slot reused");
    used[j] = 1;
    cycle.push_back(bu[j]);
  };

  // Step 1: one half of the first-branch snake; its twin waits for step 9.
  if (route_t1) {
    for (int i = (len1 - 1) % 2 ? len1 - 1 : len1 - 2; i >= 1; i -= 2)
      cycle.push_back(bt[i]);
  } else {
    for (int i = (len1 - 1) % 2 ? len1 - 2 : len1 - 1; i >= 0; i -= 2)
      cycle.push_back(bt[i]);
    used[0] = 1;  // v0 consumed via the first branch
  }

  // Step 2: first residue class climbs toward the fourth anchor.
  if (f >= 4)
    for (int j = route_t1 ? 3 : 4; j <= f - 1; j += 4) take(j);

  // Step 3: snake of the branch stretch beyond the fourth anchor.
  for (int v : zigzag(slice(bu, f + 1, len2))) cycle.push_back(v);

  // Step 4: a second class descends (f == 3 needs both low slots by hand).
  if (f == 3) {
    take(2);
    take(1);
  } else if (f >= 2) {
    for (int j = used[f - 1] ? f - 2 : f - 1; j >= 1; j -= 4) take(j);
  }

  // Step 5: third-branch snake, reversed in the repaired f == 3 layout.
  {
    auto r3 = zigzag(slice(bw, 1, len3));
    if (f == 3) std::reverse(r3.begin(), r3.end());
    cycle.insert(cycle.end(), r3.begin(), r3.end());
  }

  // Step 6: a third class climbs back toward the fourth anchor.
  if (f >= 4)
    for (int j = used[1] ? 2 : 1; j <= f - 1; j += 4) take(j);

  // Step 7: the fourth anchor itself.
  take(f);

  // Step 8: the leftover class sweeps down, touching v0 when f % 4 == 0.
  if (f >= 4) {
    int topj = -1;
    for (int j = f - 1; j >= f - 4 && topj == -1; --j)
      if (!used[j]) topj = j;
    require_invariant(topj != -1, "no leftover class below the fourth anchor");
    for (int j = topj; j >= 1; j -= 4) take(j);
    if (topj % 4 == 0) take(0);
  }

  // Step 9: the waiting half of the first branch closes the cycle.
  if (route_t1) {
    if (!used[0]) take(0);
    for (int i = 2; i <= len1 - 1; i += 2) cycle.push_back(bt[i]);
  } else {
    for (int i = 1; i <= len1 - 1; i += 2) cycle.push_back(bt[i]);
  }
  return cycle;
}

// order[0], order[1] hang at one junction and order[2], order[3] at the
// other; spine parities split between the outbound and return trips.
std::vector<int> build_paired_case(const Tree& tbar, const TreeShape& shape) {
  std::vector<int> spine = tbar.path(shape.u0, shape.um);
  int m = static_cast<int>(spine.size()) - 1;
  std::array<std::vector<int>, 5> br;
  br[1] = tbar.path(shape.u0, shape.order[0]);
  br[2] = tbar.path(shape.u0, shape.order[1]);
  br[3] = tbar.path(shape.um, shape.order[2]);
  br[4] = tbar.path(shape.um, shape.order[3]);
  int len1 = static_cast<int>(br[1].size()) - 1;

  std::vector<int> cycle{shape.order[0]};
  for (int i = (len1 - 1) % 2 ? len1 - 2 : len1 - 1; i >= 2; i -= 2)
    cycle.push_back(br[1][i]);
  for (int v : zigzag(slice(br[2], 1, static_cast<int>(br[2].size()) - 1)))
    cycle.push_back(v);
  cycle.push_back(shape.u0);
  for (int j = 2; j <= m; j += 2) cycle.push_back(spine[j]);
  for (int v : zigzag(slice(br[3], 1, static_cast<int>(br[3].size()) - 1)))
    cycle.push_back(v);
  for (int v : zigzag(slice(br[4], 1, static_cast<int>(br[4].size()) - 1)))
    cycle.push_back(v);
  if (m >= 1)
    for (int j = m % 2 ? m : m - 1; j >= 1; j -= 2) cycle.push_back(spine[j]);
  for (int i = 1; i <= len1 - 1; i += 2) cycle.push_back(br[1][i]);
  return cycle;
}

// order[0], order[2] hang at one junction and order[1], order[3] at the
// other; four residue classes mod 4 share the spine traffic.
std::vector<int> build_crossed_case(const Tree& tbar, const TreeShape& shape) {
  std::vector<int> spine = tbar.path(shape.u0, shape.um);
  int m = static_cast<int>(spine.size()) - 1;
  require_arg(m >= 1, "crossed shape needs distinct junctions");
  std::array<std::vector<int>, 5> br;
  br[1] = tbar.path(shape.u0, shape.order[0]);
  br[2] = tbar.path(shape.um, shape.order[1]);
  br[3] = tbar.path(shape.u0, shape.order[2]);
  br[4] = tbar.path(shape.um, shape.order[3]);
  int len1 = static_cast<int>(br[1].size()) - 1;

  std::vector<char> used(m + 1, 0);
  std::vector<int> cycle{shape.order[0]};
  auto take = [&](int j) {
    require_invariant(!used[j], "spine slot reused");
    used[j] = 1;
    cycle.push_back(spine[j]);
  };

  // Step 1: even first-branch slots down to the near junction.
  for (int i = (len1 - 1) % 2 ? len1 - 2 : len1 - 1; i >= 2; i -= 2)
    cycle.push_back(br[1][i]);
  take(0);
  // Step 2: multiples of four climb the spine.
  if (m >= 4)
    for (int j = 4; j <= m; j += 4) take(j);
  // Step 3: second-branch snake.
  for (int v : zigzag(slice(br[2], 1, static_cast<int>(br[2].size()) - 1)))
    cycle.push_back(v);
  // Step 4: descend from the far junction's class.
  if (m >= 2)
    for (int j = used[m] ? m - 1 : m; j >= 1; j -= 4) take(j);
  // Step 5: third-branch snake.
  for (int v : zigzag(slice(br[3], 1, static_cast<int>(br[3].size()) - 1)))
    cycle.push_back(v);
  // Step 6: the low class climbs as far as the spine allows.
  int s6_end = -1;
  if (m == 1) {
    take(1);
    s6_end = 1;
  } else {
    for (int j = used[1] ? 2 : 1; j <= m; j += 4) {
      take(j);
      s6_end = j;
    }
  }
  // Step 7: fourth-branch snake, forward only when step 6 parked three
  // short of the far junction.
  {
    auto r4 = zigzag(slice(br[4], 1, static_cast<int>(br[4].size()) - 1));
    if (!(m >= 3 && s6_end == m - 3)) std::reverse(r4.begin(), r4.end());
    cycle.insert(cycle.end(), r4.begin(), r4.end());
  }
  // Step 8: the one free slot near the far junction sweeps down.
  if (m >= 3) {
    int topj = -1, free_count = 0;
    for (int j = m; j >= m - 3; --j)
      if (!used[j]) {
        if (topj == -1) topj = j;
        ++free_count;
      }
    require_invariant(free_count == 1,
                      "top spine window must have one free slot");
    for (int j = topj; j >= 1; j -= 4) take(j);
  }
  // Steps 9-10: odd first-branch slots close at the start.
  for (int i = 1; i <= len1 - 1; i += 2) cycle.push_back(br[1][i]);
  return cycle;
}

}  // namespace

TreeShape classify_shape(const Tree& tbar, const std::vector<int>& anchors) {
  require_arg(anchors.size() == 4, "need exactly four anchors");
  std::set<int> distinct;
  for (int v : anchors) {
    require_arg(tbar.contains(v), "anchor not in tree");
    require_arg(distinct.insert(v).second, "anchors must be distinct");
  }
  auto lv = tbar.leaves();
  require_arg(lv.size() <= 4, "tree has more than four leaves");
  for (int x : lv) require_arg(distinct.count(x), "leaf is not an anchor");

  TreeShape s;
  s.order = anchors;
  if (lv.size() <= 2) {
    s.kind = ShapeKind::two_leaf_path;
    return s;
  }

  if (lv.size() == 3) {
    int v0 = -1;
    for (int v : tbar.vertices())
      if (tbar.degree(v) >= 3) v0 = v;
    require_invariant(v0 != -1, "three-leaf tree lost its junction");
    s.v0 = v0;
    int epos = -1;
    for (int i = 0; i < 4; ++i)
      if (!std::binary_search(lv.begin(), lv.end(), anchors[i])) epos = i;
    require_invariant(epos != -1, "no interior anchor among four");
    int e = anchors[epos];
    std::vector<int> ord(4);
    for (int i = 0; i < 4; ++i) ord[i] = anchors[(epos + 1 + i) % 4];
    auto on_branch = [&](int leaf) {
      auto pb = tbar.path(v0, leaf);
      return std::find(pb.begin(), pb.end(), e) != pb.end();
    };
    if (e == v0 || on_branch(ord[0])) {
      s.kind = ShapeKind::three_leaf_side;
      s.order = ord;
    } else if (on_branch(ord[2])) {
      s.kind = ShapeKind::three_leaf_side;
      s.order = {ord[2], ord[1], ord[0], ord[3]};
      s.reflected = true;
    } else {
      require_invariant(on_branch(ord[1]), "fourth anchor off every branch");
      s.kind = ShapeKind::three_leaf_middle;
      s.order = ord;
    }
    return s;
  }

  // Four leaves: one degree-4 junction, or two degree-3 junctions.
  int j4 = -1;
  std::vector<int> j3;
  for (int v : tbar.vertices()) {
    if (tbar.degree(v) >= 4) j4 = v;
    else if (tbar.degree(v) == 3) j3.push_back(v);
  }
  if (j4 != -1) {
    require_invariant(j3.empty(), "junction pattern inconsistent");
    s.kind = ShapeKind::four_leaf_paired;
    s.u0 = s.um = j4;
    return s;
  }
  require_invariant(j3.size() == 2, "four-leaf tree needs two junctions");
  auto junction_of = [&](int leaf) {
    auto pb = tbar.path(leaf, j3[0]);
    return std::find(pb.begin(), pb.end(), j3[1]) != pb.end() ? j3[1]
                                                              : j3[0];
  };
  int partner = -1;
  for (int i = 1; i < 4; ++i)
    if (junction_of(anchors[i]) == junction_of(anchors[0])) partner = i;
  require_invariant(partner != -1, "junction pairing failed");
  s.u0 = junction_of(anchors[0]);
  s.um = s.u0 == j3[0] ? j3[1] : j3[0];
  if (partner == 1) {
    s.kind = ShapeKind::four_leaf_paired;
  } else if (partner == 3) {
    s.kind = ShapeKind::four_leaf_paired;
    s.order = {anchors[0], anchors[3], anchors[2], anchors[1]};
    s.reflected = true;
  } else {
    s.kind = ShapeKind::four_leaf_crossed;
  }
  return s;
}

std::vector<int> tbar_cycle(const Tree& tbar, const TreeShape& shape) {
  std::vector<int> cycle;
  switch (shape.kind) {
    case ShapeKind::two_leaf_path:
      cycle = build_path_case(tbar, shape);
      break;
    case ShapeKind::three_leaf_side:
      cycle = build_side_case(tbar, shape);
      break;
    case ShapeKind::three_leaf_middle:
      cycle = build_middle_case(tbar, shape);
      break;
    case ShapeKind::four_leaf_paired:
      cycle = build_paired_case(tbar, shape);
      break;
    case ShapeKind::four_leaf_crossed:
      cycle = build_crossed_case(tbar, shape);
      break;
  }
  require_invariant(check_tbar_cycle(tbar, shape.order, cycle),
                    "built cycle fails its own audit");
  return cycle;
}

bool check_tbar_cycle(const Tree& tbar, const std::vector<int>& anchors,
                      const std::vector<int>& cycle) {
  if (static_cast<int>(cycle.size()) != tbar.size()) return false;
  std::vector<char> seen(tbar.universe(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= tbar.universe() || !tbar.contains(v) || seen[v])
      return false;
    seen[v] = 1;
  }
  int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i)
    if (tbar.distance(cycle[i], cycle[(i + 1) % n]) > 4) return false;
  if (!anchors_in_cyclic_order(cycle, anchors)) return false;
  for (int leaf : tbar.leaves())
    if (!leaf_condition_ok(tbar, 4, cycle, leaf)) return false;
  return true;
}

CycleCertificate four_ordered_hamiltonian(const Graph& g,
                                          const std::vector<int>& anchors) {
  require_arg(anchors.size() == 4, "need exactly four anchors");
  require_arg(g.connected(), "graph must be connected");
  for (int v : anchors) require_arg(v >= 0 && v < g.n(), "anchor out of range");

  Tree span = spanning_tree(g);
  Tree tbar = steiner_subtree(span, anchors);
  TreeShape shape = classify_shape(tbar, anchors);

  OrderedCycle oc;
  oc.cycle = tbar_cycle(tbar, shape);
  oc.anchors = anchors;

  OrderedCycle sat = saturate_subtree(tbar, 4, oc);
  OrderedCycle full = attach_components(span, tbar, 4, sat);

  CycleCertificate cert;
  cert.n = g.n();
  cert.power = 4;
  cert.cycle = full.cycle;
  cert.anchors = anchors;
  cert.construction = "four";
  require_invariant(static_cast<int>(cert.cycle.size()) == g.n(),
                    "certificate must cover the graph");
  return cert;
}

}  // namespace kord
