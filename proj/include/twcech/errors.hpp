#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twcech {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class NotInNerve : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class NotSES : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class CellUndefined : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NonInteger : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

/// Malformed instance or report input.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/**
 * A twist cochain failed the cocycle condition.  Carries the offending
 * 3-simplex, the vector component and the nonzero value of dF there.
 */
class NotClosed : public Error {
 public:
  NotClosed(std::vector<int> simplex, int component, std::string value);

  const std::vector<int>& simplex() const { return simplex_; }
  int component() const { return component_; }
  const std::string& value() const { return value_; }

 private:
  std::vector<int> simplex_;
  int component_;
  std::string value_;
};

}  // namespace twcech
