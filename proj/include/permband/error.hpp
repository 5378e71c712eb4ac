#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permband {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values: degree mismatch, out-of-range positions, invalid (n, m).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed permutation / ladder text. The message names the offending token.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A construction was asked to run outside the (n, m) range it is valid for.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// The request needs more memory than the configured cap allows.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t required_bytes)
      : Error(what), required_bytes_(required_bytes) {}
  std::uint64_t required_bytes() const noexcept { return required_bytes_; }

 private:
  std::uint64_t required_bytes_;
};

}  // namespace permband
