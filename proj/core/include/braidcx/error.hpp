#pragma once

#include <stdexcept>
#include <string>

namespace braidcx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad word letter, non-finite Coxeter
/// matrix, unknown group name, window mismatch).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. gamma of a
/// non-palindromic h-vector, link of a non-face).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace braidcx
