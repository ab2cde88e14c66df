#include "kord/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <set>

#include "kord/errors.hpp"
#include "kord/marking.hpp"
#include "kord/ordered_cycle.hpp"

namespace kord {

namespace {

int find_index(const std::vector<int>& cycle, int v) {
  for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
    if (cycle[i] == v) return i;
  return -1;
}

// Grow the linked cycle to a Hamiltonian one: repeatedly pick the smallest
// absent vertex with a host neighbor already present and splice it next to
// that neighbor on whichever side stays within reach `t`.  `dist` is the
// host metric, `host_nbrs` the host neighbors of a vertex.
template <typename Dist, typename Nbrs>
void weave_missing(std::vector<int>& cycle, int n, int t, Dist dist,
                   Nbrs host_nbrs) {
  std::vector<char> in_cycle(n, 0);
  for (int v : cycle) in_cycle[v] = 1;
  int missing = n - static_cast<int>(cycle.size());
  while (missing > 0) {
    int z = -1, u = -1;
    for (int cand = 0; cand < n && z == -1; ++cand) {
      if (in_cycle[cand]) continue;
      for (int nb : host_nbrs(cand))
        if (in_cycle[nb]) {
          z = cand;
          u = nb;
          break;
        }
    }
    require_invariant(z != -1, "no absent vertex touches the cycle");
    int m = static_cast<int>(cycle.size());
    int at = find_index(cycle, u);
    int pred = cycle[(at - 1 + m) % m];
    if (dist(z, pred) <= t) {
      cycle.insert(cycle.begin() + at, z);
    } else {
      require_invariant(dist(z, cycle[(at + 1) % m]) <= t,
                        "absent vertex out of reach on both sides");
      cycle.insert(cycle.begin() + at + 1, z);
    }
    in_cycle[z] = 1;
    --missing;
  }
}

void check_certificate(const CycleCertificate& cert,
                       const std::function<int(int, int)>& dist) {
  require_invariant(static_cast<int>(cert.cycle.size()) == cert.n,
                    "cycle must cover the graph");
  std::vector<char> seen(cert.n, 0);
  for (int v : cert.cycle) {
    require_invariant(v >= 0 && v < cert.n && !seen[v],
                      "cycle must visit each vertex once");
    seen[v] = 1;
  }
  for (int i = 0; i < cert.n; ++i)
    require_invariant(
        dist(cert.cycle[i], cert.cycle[(i + 1) % cert.n]) <= cert.power,
        "cycle hop exceeds the power");
  require_invariant(anchors_in_cyclic_order(cert.cycle, cert.anchors),
                    "anchors out of cyclic order");
}

}  // namespace

CycleCertificate path_ordered_hamiltonian(int n,
                                          const std::vector<int>& anchors) {
  int k = static_cast<int>(anchors.size());
  require_arg(k >= 3, "need at least three anchors");
  require_arg(n >= k, "path too short for the anchors");
  std::set<int> distinct;
  for (int a : anchors) {
    require_arg(a >= 1 && a <= n, "anchor label out of range");
    require_arg(distinct.insert(a).second, "anchors must be distinct");
  }

  int t = 3 * k / 2 - 1;
  Marking mk = mark_anchors(anchors, MarkMode::path, t);

  // Runs between consecutive anchors thread one residue class mod t each;
  // distinct labels keep interiors disjoint and clear of every anchor.
  std::vector<int> cycle;
  for (int i = 0; i < k; ++i) {
    int from = anchors[i], to = anchors[(i + 1) % k];
    int lo = std::min(from, to), hi = std::max(from, to);
    std::vector<int> interior;
    for (int q = lo + 1; q < hi; ++q)
      if (q % t == mk.labels[i] % t) interior.push_back(q);
    if (from > to) std::reverse(interior.begin(), interior.end());
    cycle.push_back(from);
    cycle.insert(cycle.end(), interior.begin(), interior.end());
  }

  for (int& v : cycle) --v;  // to 0-indexed vertices
  auto dist = [](int a, int b) { return std::abs(a - b); };
  auto host_nbrs = [n](int v) {
    std::vector<int> out;
    if (v > 0) out.push_back(v - 1);
    if (v < n - 1) out.push_back(v + 1);
    return out;
  };
  weave_missing(cycle, n, t, dist, host_nbrs);

  CycleCertificate cert;
  cert.n = n;
  cert.power = t;
  cert.cycle = cycle;
  for (int a : anchors) cert.anchors.push_back(a - 1);
  cert.construction = "path";
  check_certificate(cert, dist);
  return cert;
}

CycleCertificate cycle_five_ordered(int n, const std::vector<int>& anchors) {
  require_arg(n >= 5, "cycle too short");
  require_arg(anchors.size() == 5, "need exactly five anchors");
  std::set<int> distinct;
  for (int a : anchors) {
    require_arg(a >= 0 && a < n, "anchor out of range");
    require_arg(distinct.insert(a).second, "anchors must be distinct");
  }

  // Anchors in host-cycle order starting from the smallest id.
  int base = *std::min_element(anchors.begin(), anchors.end());
  std::array<int, 5> w{};
  {
    std::vector<int> sorted(anchors);
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      return (a - base + n) % n < (b - base + n) % n;
    });
    std::copy(sorted.begin(), sorted.end(), w.begin());
  }
  std::array<int, 5> gap{};
  for (int i = 0; i < 5; ++i) gap[i] = (w[(i + 1) % 5] - w[i] + n) % n;

  // Each arc splits into residue classes mod 3: class 1 serves the long run
  // arriving from behind, one class the long run leaving ahead, and the
  // leftover class the short run.
  auto arc_class = [&](int i, int lo_off, int hi_off, int residue) {
    std::vector<int> out;
    for (int j = lo_off; j <= hi_off; ++j)
      if (j % 3 == residue) out.push_back((w[i] + j) % n);
    return out;
  };
  std::array<std::vector<int>, 5> short_run, long_run;
  for (int i = 0; i < 5; ++i) {
    int ai = gap[i] % 3 == 2 ? 2 : 1;
    int ci = (gap[i] - ai) % 3;
    long_run[i].push_back(w[i]);
    for (int v : arc_class(i, 1, gap[i] - ai, ci)) long_run[i].push_back(v);
    int next = (i + 1) % 5;
    for (int v : arc_class(next, 1, gap[next] - 1, 1)) long_run[i].push_back(v);
    long_run[i].push_back(w[(i + 2) % 5]);

    int leftover = -1;  // the residue in {0,1,2} serving neither long run
    for (int r = 0; r < 3; ++r)
      if (r != 1 && r != ci) leftover = r;
    short_run[i].push_back(w[i]);
    for (int v : arc_class(i, 1, gap[i] - 1, leftover))
      short_run[i].push_back(v);
    short_run[i].push_back(w[(i + 1) % 5]);
  }

  std::vector<int> widx(n, -1);
  for (int i = 0; i < 5; ++i) widx[w[i]] = i;

  std::vector<int> cycle;
  for (int s = 0; s < 5; ++s) {
    int a = widx[anchors[s]], b = widx[anchors[(s + 1) % 5]];
    int diff = (b - a + 5) % 5;
    std::vector<int> seg;
    switch (diff) {
      case 1: seg = short_run[a]; break;
      case 2: seg = long_run[a]; break;
      case 4:
        seg = short_run[b];
        std::reverse(seg.begin(), seg.end());
        break;
      default:
        require_invariant(diff == 3, "anchor pair degenerate");
        seg = long_run[b];
        std::reverse(seg.begin(), seg.end());
        break;
    }
    cycle.insert(cycle.end(), seg.begin(), seg.end() - 1);
  }

  auto dist = [n](int a, int b) {
    int d = std::abs(a - b);
    return std::min(d, n - d);
  };
  auto host_nbrs = [n](int v) {
    return std::vector<int>{(v - 1 + n) % n, (v + 1) % n};
  };
  weave_missing(cycle, n, 3, dist, host_nbrs);

  CycleCertificate cert;
  cert.n = n;
  cert.power = 3;
  cert.cycle = cycle;
  cert.anchors = anchors;
  cert.construction = "cycle5";
  check_certificate(cert, dist);
  return cert;
}

CycleCertificate host_five_ordered(const Graph& g, const std::vector<int>& ham,
                                   const std::vector<int>& anchors) {
  int n = g.n();
  require_arg(static_cast<int>(ham.size()) == n,
              "Hamiltonian cycle must cover the graph");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ham[i];
    require_arg(v >= 0 && v < n && pos[v] == -1,
                "Hamiltonian cycle must visit each vertex once");
    pos[v] = i;
  }
  for (int i = 0; i < n; ++i)
    require_arg(g.has_edge(ham[i], ham[(i + 1) % n]),
                "claimed Hamiltonian cycle uses a non-edge");

  std::vector<int> mapped;
  for (int a : anchors) {
    require_arg(a >= 0 && a < n, "anchor out of range");
    mapped.push_back(pos[a]);
  }
  CycleCertificate inner = cycle_five_ordered(n, mapped);

  CycleCertificate cert;
  cert.n = n;
  cert.power = 3;
  for (int c : inner.cycle) cert.cycle.push_back(ham[c]);
  cert.anchors = anchors;
  cert.construction = "host5";
  require_invariant(anchors_in_cyclic_order(cert.cycle, cert.anchors),
                    "anchors out of cyclic order");
  return cert;
}

}  // namespace kord
