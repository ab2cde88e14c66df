#pragma once

#include <cstdint>
#include <string>

#include "kord/graph.hpp"

namespace kord {

Graph path_graph(int n);
Graph cycle_graph(int n);

// Uniform random labeled tree (Prufer sequence), deterministic per seed
// across platforms.
Graph random_tree(int n, std::uint64_t seed);

// Random connected graph: random tree plus m - (n-1) distinct extra edges.
Graph random_connected(int n, int m, std::uint64_t seed);

// Parse a generator description: "path:N", "cycle:N", "rand-tree:N:SEED",
// "rand-conn:N:M:SEED".
Graph generate(const std::string& desc);

}  // namespace kord
