#pragma once

#include <string>
#include <vector>

#include "kord/certificate.hpp"
#include "kord/graph.hpp"

namespace kord {

struct VerifyResult {
  bool hamiltonian_ok = false;
  bool edges_ok = false;
  bool order_ok = false;
  std::string first_violation;
  bool ok() const { return hamiltonian_ok && edges_ok && order_ok; }
};

// Judge a certificate against the base graph it claims to order.  The graph
// order must match the certificate's; anything else is reported, not thrown.
VerifyResult verify_certificate(const Graph& g, const CycleCertificate& cert);

enum class OracleStatus { found, not_found, bound_exceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::bound_exceeded;
  std::vector<int> witness;  // a qualifying cycle when status == found
};

// Complete search for a cycle visiting the anchors in the given cyclic
// order, Hamiltonian when require_hamiltonian, else over any subset.
// Deterministic: neighbors ascend, the first completion wins.  Graphs
// larger than max_n report bound_exceeded without searching.
OracleResult oracle_cycle(const Graph& g, const std::vector<int>& anchors,
                          bool require_hamiltonian, int max_n = 24);

struct WitnessInstance {
  Graph base;
  int power;
  std::vector<int> anchors;  // sequence no cycle in base^power realizes
};

// Path on 2k-1 vertices whose floor(3k/2)-3 power cannot realize the
// alternating anchor layout; for odd k the last vertex lies past the layout.
WitnessInstance witness_path_lower(int k);

// Cycle on n >= 3m+2 vertices whose m-th power cannot realize the 2m
// interleaved anchors.  Only m == 3 is exercised by the test suite; larger
// m extends the same interleaving pattern.
WitnessInstance witness_cycle_lower(int m, int n);

struct SweepRow {
  int power = 0;
  bool all_pass = false;
};

struct SweepResult {
  int p_k = -1;  // smallest power whose sweep passed
  std::vector<SweepRow> rows;
};

// Smallest p making g^p k-ordered Hamiltonian, by oracle over canonical
// anchor sequences (least anchor first, second less than last).
SweepResult sweep_pk(const Graph& g, int k, int max_n = 12);

}  // namespace kord
