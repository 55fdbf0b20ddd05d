#pragma once

#include <stdexcept>
#include <string>

namespace nm {

// Error taxonomy. Exit-code mapping in the CLI: bad input -> 2,
// numerical failure -> 3.
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failures (exit code 3).
struct InversionStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DifferentiationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nm
