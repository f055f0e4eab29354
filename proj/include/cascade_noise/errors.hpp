#pragma once

#include <stdexcept>

namespace cascade_noise {

// A chain document could not be parsed or violates the strict schema.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A chain (or chain prefix) fails its structural invariants.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace cascade_noise
