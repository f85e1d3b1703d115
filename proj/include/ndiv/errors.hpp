#pragma once

#include <stdexcept>

namespace ndiv {

// Invalid specs, malformed inputs, violated preconditions. CLI maps this to exit code 2.
struct spec_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration budget exceeded. CLI maps this to exit code 4.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ndiv
