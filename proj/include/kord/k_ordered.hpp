#pragma once

#include <utility>
#include <vector>

#include "kord/certificate.hpp"
#include "kord/graph.hpp"
#include "kord/ordered_cycle.hpp"

namespace kord {

// Cycle through the k >= 3 anchors in order inside g^t, t = floor(3k/2),
// built from colored walks across the Steiner subtree of a spanning tree.
// Returns the cycle and t.
std::pair<OrderedCycle, int> build_ordered_cycle(
    const Graph& g, const std::vector<int>& anchors);

// Hamiltonian cycle of g^(t+1) visiting the anchors in order: the ordered
// cycle above, saturated over the Steiner subtree and extended across the
// whole spanning tree.
CycleCertificate ordered_hamiltonian(const Graph& g,
                                     const std::vector<int>& anchors);

}  // namespace kord
