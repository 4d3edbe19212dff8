#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xiaudit {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument (precision below minimum, out-of-range count, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// Divisor enclosure straddles zero.
class DivisionByZeroEnclosure : public DomainViolation {
 public:
  using DomainViolation::DomainViolation;
};

/// Argument enclosure contains a pole of the function.
class PoleEnclosure : public Error {
 public:
  using Error::Error;
};

/// Target radius unreachable within the precision cap.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Zero-table line that does not parse; carries the 1-based line number.
class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NonMonotonicOrdinates : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class ChecksumMismatch : public Error {
 public:
  using Error::Error;
};

/// Bracket does not isolate a zero during refinement.
class NoSignChange : public Error {
 public:
  using Error::Error;
};

class EmptyCatalog : public Error {
 public:
  using Error::Error;
};

class TBeyondCatalog : public Error {
 public:
  using Error::Error;
};

class TTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace xiaudit
