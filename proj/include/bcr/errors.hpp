#ifndef BCR_ERRORS_HPP
#define BCR_ERRORS_HPP

#include <stdexcept>

namespace bcr {

// Malformed input documents (bad JSON, bad rationals, bad shapes).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally well-formed but mathematically inadmissible input.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed: two routes that must agree on valid data
// disagreed. This signals a bug in the library, never bad input.
struct inconsistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace bcr

#endif
