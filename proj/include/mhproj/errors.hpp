#pragma once

#include <stdexcept>
#include <string>

namespace mhproj {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact integer computation left the range of the underlying representation.
class OverflowError : public Error {
 public:
  OverflowError() : Error("arithmetic overflow in exact integer computation") {}
  explicit OverflowError(const std::string& where)
      : Error("arithmetic overflow in exact integer computation (" + where + ")") {}
};

/// A configured enumeration or size ceiling was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Input is syntactically or semantically invalid.
class ParseError : public Error {
 public:
  enum class Kind { Malformed, UnknownKey, DimensionMismatch, DuplicateVariable, BadTorsionOrder, EmptyRing };

  ParseError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Arguments violate a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two independent checks disagree in a way that cannot happen if both are correct.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace mhproj
