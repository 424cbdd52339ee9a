#pragma once

#include <stdexcept>
#include <string>

namespace drees {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated precondition: mismatched rings, division by zero, bad point, ...
struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A configured size or time budget was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace drees
