#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition (bad conductor, q not a prime power, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

/// A configured bound (group order, class count, expansion size) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A virtual character was supplied where a genuine one is required.
class NotGenuine : public Error {
 public:
  using Error::Error;
};

/// Operands live on different groups.
class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("class functions belong to different groups") {}
};

/// Broken internal invariant; carries diagnostics.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace eigc
