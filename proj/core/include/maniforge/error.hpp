#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maniforge/types.hpp"

namespace maniforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationErrorKind {
  Malformed,
  NotInvolution,
  FixedPoint,
  NotSimple,
  BadSquare,
  Disconnected,
};

std::string_view to_string(ValidationErrorKind kind);

/// A violated maniplex axiom with a witness flag and the colour(s) involved.
class ValidationError : public Error {
 public:
  ValidationError(ValidationErrorKind kind, Flag flag, Colour colour, Colour other_colour, std::string detail);

  ValidationErrorKind kind() const { return kind_; }
  Flag flag() const { return flag_; }
  Colour colour() const { return colour_; }
  Colour other_colour() const { return other_colour_; }

 private:
  ValidationErrorKind kind_;
  Flag flag_;
  Colour colour_;
  Colour other_colour_;
};

class ColourOutOfRange : public Error {
 public:
  ColourOutOfRange(Colour colour, std::size_t rank);
};

class NotThin : public Error {
 public:
  using Error::Error;
};

/// Raised when a chain graph, coset action or cover violates the maniplex axioms.
class NotManiplex : public Error {
 public:
  explicit NotManiplex(const ValidationError& cause);
  ValidationErrorKind kind() const { return kind_; }
  Flag flag() const { return flag_; }

 private:
  ValidationErrorKind kind_;
  Flag flag_;
};

class NoExtension : public Error {
 public:
  explicit NoExtension(Flag conflict);
  Flag conflict() const { return conflict_; }

 private:
  Flag conflict_;
};

class NoLift : public Error {
 public:
  explicit NoLift(Dart witness);
  Dart witness() const { return witness_; }

 private:
  Dart witness_;
};

class NotAutomorphism : public Error {
 public:
  explicit NotAutomorphism(Dart witness);
  Dart witness() const { return witness_; }

 private:
  Dart witness_;
};

class CosetOverflow : public Error {
 public:
  explicit CosetOverflow(std::size_t limit);
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class ConstructionMismatch : public Error {
 public:
  ConstructionMismatch(std::string object, std::vector<std::string> failed_checks);
  const std::vector<std::string>& failed_checks() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace maniforge
