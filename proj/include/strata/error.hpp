#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NoTableAvailable : public Error {
 public:
  using Error::Error;
};

class NotAStratum : public Error {
 public:
  using Error::Error;
};

class TripleNotFound : public Error {
 public:
  using Error::Error;
};

class NoData : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class PlacementMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace strata
