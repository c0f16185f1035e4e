#pragma once

#include <stdexcept>
#include <string>

namespace hessgkm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyDomain : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Raised when a matrix violates the skeletal nilpotent shape; the message
/// names the offending positions.
class NotSkeletal : public Error {
 public:
  using Error::Error;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// The request is mathematically outside what the library handles, e.g. a
/// non-regular torus for a moment graph.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace hessgkm
