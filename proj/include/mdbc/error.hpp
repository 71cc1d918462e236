#pragma once

#include <stdexcept>
#include <string>

namespace mdbc {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An event index or interval outside 1..N.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A parameter outside the mathematical domain of an operation
// (negative mass, m = 0 where m >= 1 is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exact oracle would exceed its documented size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// A model file that does not conform to the model-spec schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdbc
