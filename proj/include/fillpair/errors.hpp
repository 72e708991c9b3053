#pragma once

#include <stdexcept>
#include <string>

namespace fillpair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (nonpositive angle, angle sum >= pi, nonpositive area, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + std::move(message)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Operation requires a valid fat graph and validation reported a violation.
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  using Error::Error;
};

// The constraint system has no root within the admissible angle box.
class InfeasibleThetaError : public Error {
 public:
  using Error::Error;
};

class SolverFailureError : public Error {
 public:
  SolverFailureError(const std::string& message, std::string trace)
      : Error(message), trace_(std::move(trace)) {}
  const std::string& trace() const { return trace_; }

 private:
  std::string trace_;
};

// The requested rule does not apply to this input (e.g. merging a face
// multiset without a 4k-sided face).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

}  // namespace fillpair
