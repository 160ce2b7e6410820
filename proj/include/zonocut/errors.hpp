#pragma once

#include <stdexcept>

namespace zono {

// Dehomogenization of a point with x0 = 0.
struct AtInfinityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Shadow boundary cannot be matched to a cycle of edges (a 2-face of the
// polytope projects onto an edge of the shadow, or two vertices share a
// projection).
struct AmbiguousShadowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bounded search exhausted without a witness.
struct SearchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zono
