#pragma once

#include <stdexcept>
#include <string>

namespace fmzv {

// A prime that has to be excluded from a modular computation, e.g. because a
// rational coefficient or a Bernoulli denominator is divisible by it.
class SkipPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request is well-formed but beyond what this build can compute.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric evaluation could not certify the requested precision.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters violate the hypotheses of a theorem.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fmzv
