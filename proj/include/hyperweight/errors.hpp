#pragma once

#include <stdexcept>

namespace hyperweight {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad parameters, parse failures, precondition violations.
struct InvalidArgument : Error {
  using Error::Error;
};

// A desk-scale gate was exceeded: enumeration size, step caps, or checked
// integer overflow.
struct ResourceLimit : Error {
  using Error::Error;
};

}  // namespace hyperweight
