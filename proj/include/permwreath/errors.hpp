#pragma once

#include <stdexcept>
#include <string>

namespace permwreath {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured cap (length, enumeration size, oracle size) would be exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace permwreath
