#pragma once

#include "kord/ordered_cycle.hpp"
#include "kord/tree.hpp"

namespace kord {

// Leaf rule on a cycle in tree^p: the leaf must have a cycle neighbor
// within p-2, or one at exactly p-1 that is itself no leaf.
bool leaf_condition_ok(const Tree& tree, int p, const std::vector<int>& cycle,
                       int leaf);

// Grows a cycle in u^p into a Hamiltonian cycle of u^p by inserting each
// missing vertex into a cycle edge whose tree path passes through it.
// Requires hops <= p, every leaf of u on the cycle, and the leaf rule; all
// three survive every insertion and the anchor order is untouched.
OrderedCycle saturate_subtree(const Tree& u, int p, const OrderedCycle& c);

// Extends a Hamiltonian ordered cycle of the subtree u into one of the full
// tree t, absorbing the hanging components one attachment vertex at a time
// via Hamiltonian paths of their cubes.  Needs p >= 4 whenever an
// attachment vertex is interior; hops stay <= p and anchors keep their
// order.
OrderedCycle attach_components(const Tree& t, const Tree& u, int p,
                               const OrderedCycle& c);

}  // namespace kord
