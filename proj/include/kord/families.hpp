#pragma once

#include <vector>

#include "kord/certificate.hpp"
#include "kord/graph.hpp"

namespace kord {

// Ordered Hamiltonian cycle through anchors (1-indexed labels on the path
// 1..n) in the floor(3k/2)-1 power of that path.  The certificate is
// 0-indexed like every other module.
CycleCertificate path_ordered_hamiltonian(int n, const std::vector<int>& anchors);

// Ordered Hamiltonian cycle through five anchors (0-indexed) in the cube of
// the cycle 0..n-1.
CycleCertificate cycle_five_ordered(int n, const std::vector<int>& anchors);

// Same construction carried through any host graph with a known Hamiltonian
// cycle `ham` (vertices of g in cycle order).
CycleCertificate host_five_ordered(const Graph& g, const std::vector<int>& ham,
                                   const std::vector<int>& anchors);

}  // namespace kord
