#pragma once

#include <string>
#include <vector>

namespace kord {

// Verifiable result of a construction: a Hamiltonian cycle of the power
// graph G^power visiting the anchors in the requested cyclic order.
struct CycleCertificate {
  int n = 0;
  int power = 0;
  std::vector<int> cycle;
  std::vector<int> anchors;
  std::string construction;  // general | four | path | cycle5 | host5
};

}  // namespace kord
