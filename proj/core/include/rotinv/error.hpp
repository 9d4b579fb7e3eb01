#pragma once

#include <stdexcept>
#include <string>

namespace rotinv {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Array shapes that do not agree (non-square input, wrong coordinate count,
/// mixed dimensions inside one system).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A tensor tagged Symmetric/Antisymmetric whose components violate the tag,
/// or a metric entry that is not +1/-1.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An expression slot that names nothing in the system, or names an object of
/// the wrong kind.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text: expression syntax, metric strings, JSON documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotinv
