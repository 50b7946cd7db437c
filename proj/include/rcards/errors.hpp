#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcards {

// Base of every error raised by the library. Callers that only care about
// "something was rejected" catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inverse of zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

// An operation would have to materialize more points, hands or checks than
// the configured Budget allows.
class SizeGuard : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class BadHandSize : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class EmptyCath : public Error {
 public:
  EmptyCath() : Error("the excluding-hand construction needs at least one card held by Cath") {}
};

// Bob found zero or several announced hands inside the complement of his hand.
class Ambiguous : public Error {
 public:
  explicit Ambiguous(std::size_t count)
      : Error("announcement admits " + std::to_string(count) + " hands avoiding Bob's cards"),
        count_(count) {}

  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

// Malformed or inconsistent input document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcards
