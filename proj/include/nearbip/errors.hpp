#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearbip/vertex_set.hpp"

namespace nearbip {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(Vertex v);
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

class OutOfRangeError : public Error {
 public:
  OutOfRangeError(std::size_t vertex, std::size_t n);
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

/// Raised by the diameter-2 entry points. `actual` is empty for a
/// disconnected graph.
class DiameterNotTwo : public Error {
 public:
  explicit DiameterNotTwo(std::optional<std::size_t> actual);
  std::optional<std::size_t> actual() const { return actual_; }

 private:
  std::optional<std::size_t> actual_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class StructureViolation : public Error {
 public:
  StructureViolation(std::string property, std::vector<Vertex> witness);
  const std::string& property() const { return property_; }
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  std::string property_;
  std::vector<Vertex> witness_;
};

class InvalidDecomposition : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLarge : public Error {
 public:
  SearchSpaceTooLarge(std::size_t n, std::size_t limit);
};

/// Malformed text input; `line` is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ClauseArityError : public Error {
 public:
  ClauseArityError(std::size_t clause, std::size_t literals);
  explicit ClauseArityError(const std::string& what);
  std::size_t clause() const { return clause_; }

 private:
  std::size_t clause_ = 0;
};

class RepeatedVariableError : public Error {
 public:
  RepeatedVariableError(std::size_t clause, int variable);
  std::size_t clause() const { return clause_; }

 private:
  std::size_t clause_;
};

class TooManyLiterals : public Error {
 public:
  TooManyLiterals();
};

class UnsatisfiedClause : public Error {
 public:
  explicit UnsatisfiedClause(std::size_t clause);
  std::size_t clause() const { return clause_; }

 private:
  std::size_t clause_;
};

}  // namespace nearbip
