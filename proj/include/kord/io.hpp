#pragma once

#include <iosfwd>

#include "kord/certificate.hpp"
#include "kord/graph.hpp"

namespace kord {

// Edge-list format: an "n m" header then m lines "u v" (0-indexed, u != v,
// no duplicates up to orientation); '#' starts a comment anywhere.  The
// writer emits edges as u < v in lexicographic order.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Certificate format: one "key value..." line per field, keys n, power,
// cycle, anchors, construction.  The writer keeps that order.
CycleCertificate read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const CycleCertificate& cert);

}  // namespace kord
