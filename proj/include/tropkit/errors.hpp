#pragma once

#include <stdexcept>
#include <string>

namespace tropkit {

// Base class for all toolkit errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated invariant or precondition does not hold; the message names it.
struct validation_error : error {
  using error::error;
};

// Malformed or unreadable input file.
struct io_error : error {
  using error::error;
};

}  // namespace tropkit
