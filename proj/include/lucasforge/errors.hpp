#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lucasforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact polynomial or integer division left a remainder.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Requested index lies beyond the cache guard.
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

// A division the underlying theory guarantees to succeed failed anyway;
// always indicates an implementation bug, never bad input.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

class NotCoprime : public Error {
 public:
  explicit NotCoprime(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownTemplate : public Error {
 public:
  explicit UnknownTemplate(const std::string& what) : Error(what) {}
};

class UnknownWeightFamily : public Error {
 public:
  explicit UnknownWeightFamily(const std::string& what) : Error(what) {}
};

}  // namespace lucasforge
