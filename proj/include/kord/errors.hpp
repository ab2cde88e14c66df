#pragma once

#include <stdexcept>
#include <string>

namespace kord {

// Thrown when a constructed object fails one of the structural guarantees the
// algorithms promise (a cycle that is not Hamiltonian, a hop that is too long,
// ...).  Reaching one of these is a bug in the library, not bad user input.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

inline void require_invariant(bool ok, const std::string& msg) {
  if (!ok) throw invariant_violation(msg);
}

// Precondition failures on caller-supplied data map to std::invalid_argument.
inline void require_arg(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace kord
