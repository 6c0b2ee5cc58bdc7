#pragma once

#include <stdexcept>

namespace resdist {

// Invariant violations: bad distributions, dimension mismatches, non-physical states.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside its mathematical domain (f outside [0,1], r < 1, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Residual-use-graph cycles: declared two-way inclusions or equal free sets.
struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph documents.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace resdist
