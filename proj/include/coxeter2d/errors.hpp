#pragma once

#include <stdexcept>

namespace coxeter2d {

// An enumeration or closure hit its configured bound before finishing.
// Retrying with a larger bound is the intended recovery.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coset-representative construction was requested for a (lambda, mu) pair
// outside the cases it covers.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace coxeter2d
