#pragma once

#include <stdexcept>
#include <string>

namespace hookline {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, violated precondition, or an object outside the domain of
/// the requested map. The CLI maps this to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An enumeration was asked to go past its configured size bound.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace hookline
