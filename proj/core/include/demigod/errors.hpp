#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace demigod {

// Every failure the library reports derives from Error so callers can catch
// one type at the boundary (the CLI maps these onto exit codes).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedState : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class ParseFailure : public Error {
 public:
  explicit ParseFailure(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class CorruptCache : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A certificate did not bring its state to solved.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  explicit GroupTooLarge(std::size_t cap)
      : Error("group has more than " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class NotClosedUnderInverse : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class NotDistanceRegular : public Error {
 public:
  using Error::Error;
};

class NotPerfectSquare : public Error {
 public:
  using Error::Error;
};

}  // namespace demigod
