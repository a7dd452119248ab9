#pragma once

#include <stdexcept>
#include <string>

namespace flagcoh {

// Base for all library failures. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed spec strings, unsupported (type, rank) pairs, bad arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured computation cap (Weyl group order) would be exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, unsigned long long required)
      : Error(what), required_(required) {}
  unsigned long long required() const noexcept { return required_; }

 private:
  unsigned long long required_;
};

// An internal cross-check failed (oracle mismatch, inexact division, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace flagcoh
