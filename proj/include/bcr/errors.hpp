#pragma once

#include <stdexcept>
#include <string>

namespace bcr {

// Bad input: maps to CLI exit status 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configured size bound exceeded: maps to CLI exit status 1.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation undefined for the given (valid) structure.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bound on k for diagram enumeration and algebra (default 4).
int max_k_algebra();
// Bound on k for wheels, presentations and Alexander polynomials (default 6).
int max_k_wheel();

}  // namespace bcr
