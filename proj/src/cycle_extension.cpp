#include "kord/cycle_extension.hpp"

#include <algorithm>
#include <queue>

#include "kord/errors.hpp"
#include "kord/ham_path.hpp"

namespace kord {

namespace {

bool covers_members(const Tree& tree, const std::vector<int>& cycle) {
  if (static_cast<int>(cycle.size()) != tree.size()) return false;
  std::vector<char> seen(tree.universe(), 0);
  for (int v : cycle) {
    if (!tree.contains(v) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void check_hops(const Tree& tree, int p, const std::vector<int>& cycle,
                const char* who) {
  int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i)
    require_invariant(tree.distance(cycle[i], cycle[(i + 1) % n]) <= p,
                      who);
}

// Distances are measured in dt; the witness's leaf status is judged in lt.
// The trees coincide except during attachment, where hops live in the full
// tree but the rule only ever protects leaves of the original subtree, so a
// vertex outside lt never disqualifies a distance p-1 witness.
bool qualifies(const Tree& dt, const Tree& lt, int p, int x, int y) {
  int d = dt.distance(x, y);
  if (d <= p - 2) return true;
  return d == p - 1 && !(lt.contains(y) && lt.is_leaf(y));
}

bool leaf_ok(const Tree& dt, const Tree& lt, int p,
             const std::vector<int>& cycle, int leaf) {
  int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i)
    if (cycle[i] == leaf)
      return qualifies(dt, lt, p, leaf, cycle[(i + n - 1) % n]) ||
             qualifies(dt, lt, p, leaf, cycle[(i + 1) % n]);
  return false;
}

}  // namespace

bool leaf_condition_ok(const Tree& tree, int p, const std::vector<int>& cycle,
                       int leaf) {
  return leaf_ok(tree, tree, p, cycle, leaf);
}

OrderedCycle saturate_subtree(const Tree& u, int p, const OrderedCycle& c) {
  require_arg(p >= 3, "power must be at least 3");
  require_arg(c.cycle.size() >= 3, "cycle needs at least three vertices");
  std::vector<char> on_cycle(u.universe(), 0);
  for (int v : c.cycle) {
    require_arg(u.contains(v) && !on_cycle[v], "cycle vertex invalid");
    on_cycle[v] = 1;
  }
  int n = static_cast<int>(c.cycle.size());
  for (int i = 0; i < n; ++i)
    require_arg(u.distance(c.cycle[i], c.cycle[(i + 1) % n]) <= p,
                "cycle hop exceeds the power");
  for (int leaf : u.leaves()) {
    require_arg(on_cycle[leaf], "cycle must contain every leaf");
    require_arg(leaf_condition_ok(u, p, c.cycle, leaf),
                "leaf rule fails on the input cycle");
  }
  require_arg(anchors_in_cyclic_order(c.cycle, c.anchors),
              "anchors out of order on the input cycle");

  OrderedCycle out = c;
  for (int y : u.vertices()) {
    if (on_cycle[y]) continue;
    // Some cycle edge must cross y: both sides of y hold cycle vertices.
    int m = static_cast<int>(out.cycle.size());
    int at = -1;
    for (int i = 0; i < m && at == -1; ++i) {
      int x = out.cycle[i], z = out.cycle[(i + 1) % m];
      if (x == y || z == y) continue;
      if (u.distance(x, y) + u.distance(y, z) == u.distance(x, z)) at = i;
    }
    require_invariant(at != -1, "no cycle edge crosses the missing vertex");
    out.cycle.insert(out.cycle.begin() + at + 1, y);
    on_cycle[y] = 1;

    check_hops(u, p, out.cycle, "saturation hop exceeds the power");
    for (int leaf : u.leaves())
      require_invariant(leaf_condition_ok(u, p, out.cycle, leaf),
                        "saturation breaks the leaf rule");
  }

  require_invariant(covers_members(u, out.cycle),
                    "saturation must cover the subtree");
  require_invariant(anchors_in_cyclic_order(out.cycle, out.anchors),
                    "saturation reordered the anchors");
  return out;
}

OrderedCycle attach_components(const Tree& t, const Tree& u, int p,
                               const OrderedCycle& c) {
  require_arg(p >= 3, "power must be at least 3");
  require_arg(t.universe() == u.universe(), "trees share a universe");
  for (int v : u.vertices()) require_arg(t.contains(v), "subtree leaves the tree");
  for (auto [a, b] : u.edges())
    require_arg(t.distance(a, b) == 1, "subtree edge missing from the tree");
  require_arg(covers_members(u, c.cycle), "cycle must cover the subtree");
  int n = static_cast<int>(c.cycle.size());
  for (int i = 0; i < n; ++i)
    require_arg(t.distance(c.cycle[i], c.cycle[(i + 1) % n]) <= p,
                "cycle hop exceeds the power");
  for (int leaf : u.leaves())
    require_arg(leaf_condition_ok(u, p, c.cycle, leaf),
                "leaf rule fails on the input cycle");
  require_arg(anchors_in_cyclic_order(c.cycle, c.anchors),
              "anchors out of order on the input cycle");

  std::vector<char> in_u(t.universe(), 0);
  for (int v : u.vertices()) in_u[v] = 1;

  // Hanging component of each attachment vertex: everything reachable from
  // it in t without stepping along subtree edges.
  std::vector<char> in_current = in_u;
  auto is_current_leaf = [&](int x) {
    int deg = 0;
    for (int w : t.neighbors(x)) deg += in_current[w];
    return deg <= 1;
  };

  OrderedCycle out = c;
  for (int a : u.vertices()) {
    std::vector<int> comp{a};
    std::vector<char> seen(t.universe(), 0);
    seen[a] = 1;
    std::queue<int> q;
    q.push(a);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : t.neighbors(v)) {
        if (seen[w] || (in_u[v] && in_u[w])) continue;
        seen[w] = 1;
        comp.push_back(w);
        q.push(w);
      }
    }
    if (comp.size() == 1) continue;
    std::sort(comp.begin(), comp.end());

    std::vector<std::pair<int, int>> edges;
    for (int v : comp)
      for (int w : t.neighbors(v))
        if (v < w && seen[w]) edges.emplace_back(v, w);
    Tree sub(t.universe(), comp, edges, a);
    auto r = ham_path_minus_root(sub, a);

    int m = static_cast<int>(out.cycle.size());
    if (!is_current_leaf(a)) {
      // Interior attachment: splice the component path across a cycle edge
      // whose tree path runs through the attachment vertex, entering from
      // the farther side.
      require_invariant(p >= 4,
                        "interior attachment needs power at least 4");
      int at = -1;
      for (int i = 0; i < m && at == -1; ++i) {
        int x = out.cycle[i], z = out.cycle[(i + 1) % m];
        if (x == a || z == a) continue;
        if (t.distance(x, a) + t.distance(a, z) == t.distance(x, z)) at = i;
      }
      require_invariant(at != -1, "no cycle edge crosses the attachment");
      int x = out.cycle[at], z = out.cycle[(at + 1) % m];
      std::vector<int> piece = r.path;
      if (t.distance(x, a) < t.distance(z, a))
        std::reverse(piece.begin(), piece.end());
      out.cycle.insert(out.cycle.begin() + at + 1, piece.begin(),
                       piece.end());
    } else {
      // Leaf attachment: route the component between the leaf and its
      // qualifying cycle neighbor.
      int at = -1;
      for (int i = 0; i < m; ++i)
        if (out.cycle[i] == a) {
          at = i;
          break;
        }
      require_invariant(at != -1, "attachment vertex missing from cycle");
      int prev = out.cycle[(at + m - 1) % m];
      int next = out.cycle[(at + 1) % m];
      auto ok = [&](int y) { return qualifies(t, u, p, a, y); };
      int y = -1;
      if (ok(prev) && ok(next))
        y = t.distance(a, prev) != t.distance(a, next)
                ? (t.distance(a, prev) < t.distance(a, next) ? prev : next)
                : std::min(prev, next);
      else if (ok(prev))
        y = prev;
      else if (ok(next))
        y = next;
      require_invariant(y != -1, "leaf attachment lost its witness");
      std::vector<int> piece = r.path;
      if (y == prev)
        out.cycle.insert(out.cycle.begin() + at, piece.begin(), piece.end());
      else {
        std::reverse(piece.begin(), piece.end());
        out.cycle.insert(out.cycle.begin() + at + 1, piece.begin(),
                         piece.end());
      }
    }

    for (int v : comp) in_current[v] = 1;
    check_hops(t, p, out.cycle, "attachment hop exceeds the power");
    for (int leaf : u.leaves())
      if (is_current_leaf(leaf))
        require_invariant(leaf_ok(t, u, p, out.cycle, leaf),
                          "attachment breaks the leaf rule");
  }

  require_invariant(covers_members(t, out.cycle),
                    "attachment must cover the tree");
  require_invariant(anchors_in_cyclic_order(out.cycle, out.anchors),
                    "attachment reordered the anchors");
  return out;
}

}  // namespace kord
