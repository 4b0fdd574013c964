#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccsys {

// Base of every error raised for bad input data. Internal consistency
// failures (a decoded witness that does not verify, a classification that
// contradicts the chirotope equivalence) throw std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTriple : public Error {
 public:
  using Error::Error;
};

class ConflictingAssignment : public Error {
 public:
  ConflictingAssignment(const std::string& what, std::size_t line = 0)
      : Error(what), line_(line) {}
  // 1-based source line when raised by a parser, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class CollinearTriple : public Error {
 public:
  using Error::Error;
};

class IncompleteSystem : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NonApexSystem : public Error {
 public:
  using Error::Error;
};

class TwoCycle : public Error {
 public:
  using Error::Error;
};

class OverlappingArcs : public Error {
 public:
  using Error::Error;
};

class NotATournament : public Error {
 public:
  using Error::Error;
};

class NotVortexFree : public Error {
 public:
  using Error::Error;
};

// The solver reported no CC-extension for a vortex-free tournament. Such
// a tournament always lifts, so this indicates a bug.
class LiftFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Inconclusive : public Error {
 public:
  using Error::Error;
};

class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

class TooManyFreeTriples : public Error {
 public:
  using Error::Error;
};

}  // namespace ccsys
