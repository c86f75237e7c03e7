#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A Coxeter label outside the exact field's domain {2,...,6, inf}.
class UnsupportedLabel : public Error {
 public:
  explicit UnsupportedLabel(int label)
      : Error("label " + std::to_string(label) +
              " is not supported in exact mode (use numeric mode)"),
        label_(label) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

/// Malformed graph input. `line()` is 0 when no line applies (JSON input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidLabel : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateEdge : public ParseError {
 public:
  using ParseError::ParseError;
};

class VertexOutOfRange : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptySubset : public Error {
 public:
  EmptySubset() : Error("vertex set is empty") {}
};

class OverlappingSets : public Error {
 public:
  OverlappingSets() : Error("vertex sets overlap") {}
};

class CycleBudgetExceeded : public Error {
 public:
  explicit CycleBudgetExceeded(std::size_t budget)
      : Error("cycle enumeration exceeded budget of " + std::to_string(budget)),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class RankCapExceeded : public Error {
 public:
  RankCapExceeded(std::size_t rank, std::size_t cap)
      : Error("rank " + std::to_string(rank) + " exceeds the search cap " +
              std::to_string(cap)) {}
};

}  // namespace coxlab
