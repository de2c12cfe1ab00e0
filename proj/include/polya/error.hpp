#pragma once

#include <stdexcept>
#include <string>

namespace polya {

// Malformed input or violated precondition (CLI exit code 2).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured work limit would be exceeded (CLI exit code 3).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction did not (internal defect).
struct CheckFailed : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace polya
