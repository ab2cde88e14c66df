#include "kord/graph_gen.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "kord/errors.hpp"

namespace kord {
namespace {

// std::uniform_int_distribution is implementation-defined; this rejection
// sampler keeps generated graphs identical across standard libraries.
int uniform_below(std::mt19937_64& rng, int bound) {
  const std::uint64_t span = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % span);
}

}  // namespace

Graph path_graph(int n) {
  require_arg(n >= 1, "path needs at least one vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  require_arg(n >= 3, "cycle needs at least three vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  require_arg(n >= 1, "tree needs at least one vertex");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::mt19937_64 rng(seed);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = uniform_below(rng, n);

  std::vector<int> deg(n, 1);
  for (int x : prufer) ++deg[x];
  // Standard decoding: repeatedly join the smallest leaf to the next code
  // entry, tracked with a moving pointer instead of a heap.
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : prufer) {
    g.add_edge(leaf, x);
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  g.add_edge(leaf, n - 1);
  return g;
}

Graph random_connected(int n, int m, std::uint64_t seed) {
  require_arg(n >= 1, "graph needs at least one vertex");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  require_arg(m >= n - 1 && m <= max_m, "edge count out of range");
  Graph g = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  while (g.edge_count() < m) {
    int u = uniform_below(rng, n);
    int v = uniform_below(rng, n);
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

Graph generate(const std::string& desc) {
  std::vector<std::string> parts;
  std::stringstream ss(desc);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  require_arg(!parts.empty(), "empty generator description");
  try {
    if (parts[0] == "path" && parts.size() == 2) return path_graph(std::stoi(parts[1]));
    if (parts[0] == "cycle" && parts.size() == 2) return cycle_graph(std::stoi(parts[1]));
    if (parts[0] == "rand-tree" && parts.size() == 3)
      return random_tree(std::stoi(parts[1]), std::stoull(parts[2]));
    if (parts[0] == "rand-conn" && parts.size() == 4)
      return random_connected(std::stoi(parts[1]), std::stoi(parts[2]),
                              std::stoull(parts[3]));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad generator description: " + desc);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("bad generator description: " + desc);
  }
  throw std::invalid_argument("unknown generator: " + desc);
}

}  // namespace kord
