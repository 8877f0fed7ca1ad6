#pragma once

#include <stdexcept>
#include <string>

namespace moviepop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input could not be read at all.
class IngestError : public Error {
 public:
  using Error::Error;
};

/// The input was readable but is not in the expected layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with inconsistent parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace moviepop
