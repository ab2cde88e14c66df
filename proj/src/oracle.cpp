#include "kord/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "kord/errors.hpp"
#include "kord/graph_gen.hpp"
#include "kord/ordered_cycle.hpp"

namespace kord {

namespace {

struct Search {
  const Graph& g;
  const std::vector<int>& anchors;
  const DistanceTable& dt;
  bool ham;
  int n, k;
  std::vector<char> used;
  std::vector<int> walk;
  int free_left;
  std::vector<long long> future;  // interior demand of segments j..k-1

  // Every pending anchor, and when Hamiltonian every unused vertex, must
  // stay reachable from cur through unused vertices and pending anchors.
  bool feasible(int cur, int seg) const {
    std::vector<char> pending(n, 0);
    for (int j = seg + 1; j < k; ++j) pending[anchors[j]] = 1;
    pending[anchors[0]] = 1;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{cur};
    seen[cur] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int nb : g.neighbors(queue[h]))
        if (!seen[nb] && (!used[nb] || pending[nb])) {
          seen[nb] = 1;
          queue.push_back(nb);
        }
    for (int j = seg + 1; j < k; ++j)
      if (!seen[anchors[j]]) return false;
    if (!seen[anchors[0]]) return false;
    if (ham)
      for (int v = 0; v < n; ++v)
        if (!used[v] && !seen[v]) return false;
    return true;
  }

  bool extend(int cur, int seg) {
    int target = anchors[(seg + 1) % k];
    long long need =
        std::max(0, dt.dist(cur, target) - 1) + future[seg + 1];
    if (need > free_left) return false;
    if (!feasible(cur, seg)) return false;
    for (int nb : g.neighbors(cur)) {
      if (nb == target) {
        if (seg == k - 1) {
          if (!ham || free_left == 0) return true;
        } else {
          walk.push_back(nb);
          if (extend(nb, seg + 1)) return true;
          walk.pop_back();
        }
      } else if (!used[nb]) {
        used[nb] = 1;
        --free_left;
        walk.push_back(nb);
        if (extend(nb, seg)) return true;
        walk.pop_back();
        ++free_left;
        used[nb] = 0;
      }
    }
    return false;
  }
};

}  // namespace

VerifyResult verify_certificate(const Graph& g, const CycleCertificate& cert) {
  require_arg(g.n() == cert.n, "certificate is for a different graph order");
  require_arg(cert.power >= 1, "certificate power must be positive");
  for (int a : cert.anchors)
    require_arg(a >= 0 && a < cert.n, "certificate anchor out of range");

  VerifyResult r;
  auto fail = [&](const std::string& why) {
    if (r.first_violation.empty()) r.first_violation = why;
  };

  r.hamiltonian_ok = static_cast<int>(cert.cycle.size()) == cert.n;
  std::vector<char> seen(cert.n, 0);
  for (int v : cert.cycle) {
    if (v < 0 || v >= cert.n || seen[v]) {
      r.hamiltonian_ok = false;
      break;
    }
    seen[v] = 1;
  }
  if (!r.hamiltonian_ok) {
    fail("cycle is not a permutation of the vertices");
    return r;
  }

  DistanceTable dt(g);
  r.edges_ok = true;
  for (int i = 0; i < cert.n && r.edges_ok; ++i) {
    int d = dt.dist(cert.cycle[i], cert.cycle[(i + 1) % cert.n]);
    if (d == unreachable_dist || d > cert.power) {
      r.edges_ok = false;
      fail("cycle hop exceeds the stated power");
    }
  }

  r.order_ok = anchors_in_cyclic_order(cert.cycle, cert.anchors);
  if (!r.order_ok) fail("anchors are out of cyclic order");
  return r;
}

OracleResult oracle_cycle(const Graph& g, const std::vector<int>& anchors,
                          bool require_hamiltonian, int max_n) {
  int n = g.n();
  int k = static_cast<int>(anchors.size());
  require_arg(k >= 3, "need at least three anchors");
  require_arg(k <= n, "more anchors than vertices");
  std::set<int> distinct;
  for (int a : anchors) {
    require_arg(a >= 0 && a < n, "anchor out of range");
    require_arg(distinct.insert(a).second, "anchors must be distinct");
  }
  if (n > max_n) return {OracleStatus::bound_exceeded, {}};

  DistanceTable dt(g);
  std::vector<long long> future(k + 1, 0);
  for (int j = k - 1; j >= 0; --j) {
    int d = dt.dist(anchors[j], anchors[(j + 1) % k]);
    if (d == unreachable_dist) return {OracleStatus::not_found, {}};
    future[j] = future[j + 1] + std::max(0, d - 1);
  }

  Search s{g,  anchors, dt, require_hamiltonian, n, k, std::vector<char>(n, 0),
           {}, n - k,   future};
  for (int a : anchors) s.used[a] = 1;
  s.walk.push_back(anchors[0]);
  if (s.extend(anchors[0], 0)) return {OracleStatus::found, s.walk};
  return {OracleStatus::not_found, {}};
}

WitnessInstance witness_path_lower(int k) {
  require_arg(k >= 4, "witness needs k >= 4");
  // ceil(k/2) low anchors, a block of 2*floor(k/2)-1 inner vertices, then
  // floor(k/2) high anchors.  The block is one vertex short of the anchor
  // count, so realizing the alternating order forces a hop across it, and
  // the power is too small for any non-adjacent anchor pair to make it.
  int lows = (k + 1) / 2, highs = k / 2;
  int first_high = lows + 2 * highs - 1;
  WitnessInstance w{path_graph(2 * k - 1), 3 * k / 2 - 3, {}};
  for (int i = 0; i < lows; ++i) {
    w.anchors.push_back(i);
    if (i < highs) w.anchors.push_back(first_high + i);
  }
  return w;
}

WitnessInstance witness_cycle_lower(int m, int n) {
  require_arg(m >= 3, "witness needs m >= 3");
  require_arg(n >= 3 * m + 2, "cycle too short for the witness");
  int b = n - 2 * m + 1;
  std::vector<int> high{b};
  for (int j = 1; j < m; j += 2) {
    if (j + 1 < m) high.push_back(b + j + 1);
    high.push_back(b + j);
  }
  WitnessInstance w{cycle_graph(n), m, {}};
  for (int i = 0; i < m; ++i) {
    w.anchors.push_back(i);
    w.anchors.push_back(high[i]);
  }
  return w;
}

SweepResult sweep_pk(const Graph& g, int k, int max_n) {
  int n = g.n();
  require_arg(n <= max_n, "graph too large for a sweep");
  require_arg(k >= 3 && k <= n, "anchor count out of range");
  require_arg(g.connected(), "graph must be connected");

  // Canonical sequences: least anchor first; reversal halved by keeping the
  // second anchor below the last.
  std::vector<std::vector<int>> sequences;
  std::vector<int> subset;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(subset.size()) == k) {
      std::vector<int> rest(subset.begin() + 1, subset.end());
      do {
        if (rest.front() < rest.back()) {
          std::vector<int> seq{subset[0]};
          seq.insert(seq.end(), rest.begin(), rest.end());
          sequences.push_back(seq);
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
      return;
    }
    for (int v = from; v < n; ++v) {
      subset.push_back(v);
      choose(v + 1);
      subset.pop_back();
    }
  };
  choose(0);

  SweepResult out;
  for (int p = 1;; ++p) {
    require_invariant(p <= n, "sweep passed the diameter bound");
    Graph gp = power(g, p);
    bool all = true;
    for (const auto& seq : sequences) {
      OracleResult res = oracle_cycle(gp, seq, true, n);
      require_invariant(res.status != OracleStatus::bound_exceeded,
                        "sweep oracle hit its bound");
      if (res.status != OracleStatus::found) {
        all = false;
        break;
      }
    }
    out.rows.push_back({p, all});
    if (all) {
      out.p_k = p;
      break;
    }
  }
  return out;
}

}  // namespace kord
