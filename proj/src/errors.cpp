#include "nearbip/errors.hpp"

#include <utility>

namespace nearbip {

SelfLoopError::SelfLoopError(Vertex v)
    : Error("self-loop at vertex " + std::to_string(v)), vertex_(v) {}

OutOfRangeError::OutOfRangeError(std::size_t vertex, std::size_t n)
    : Error("vertex " + std::to_string(vertex) + " out of range for n = " +
            std::to_string(n)),
      vertex_(vertex) {}

DiameterNotTwo::DiameterNotTwo(std::optional<std::size_t> actual)
    : Error("diameter is " + (actual ? std::to_string(*actual) : std::string("infinite")) +
            ", expected 2"),
      actual_(actual) {}

StructureViolation::StructureViolation(std::string property, std::vector<Vertex> witness)
    : Error("structure property (" + property + ") violated"),
      property_(std::move(property)),
      witness_(std::move(witness)) {}

SearchSpaceTooLarge::SearchSpaceTooLarge(std::size_t n, std::size_t limit)
    : Error("graph has " + std::to_string(n) + " vertices, exhaustive search limit is " +
            std::to_string(limit)) {}

SyntaxError::SyntaxError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

ClauseArityError::ClauseArityError(std::size_t clause, std::size_t literals)
    : Error("clause " + std::to_string(clause) + " has " + std::to_string(literals) +
            " literals, expected 3"),
      clause_(clause) {}

ClauseArityError::ClauseArityError(const std::string& what) : Error(what) {}

RepeatedVariableError::RepeatedVariableError(std::size_t clause, int variable)
    : Error("clause " + std::to_string(clause) + " repeats variable " +
            std::to_string(variable)),
      clause_(clause) {}

TooManyLiterals::TooManyLiterals()
    : Error("at most two of X1, X2, X3 may be placed in the independent set") {}

UnsatisfiedClause::UnsatisfiedClause(std::size_t clause)
    : Error("assignment falsifies clause " + std::to_string(clause)), clause_(clause) {}

}  // namespace nearbip
