#pragma once

#include <stdexcept>
#include <string>

namespace holo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A value would break a type invariant (degenerate gram, generator that
/// does not preserve the form, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `path()` names the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A certificate produced by the engine failed exact re-verification.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace holo
