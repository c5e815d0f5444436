#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgp {

// Base of all library errors. what() carries a readable message; subclasses
// carry the structured witness data the message was built from.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cayley-table validation: first associativity failure in row-major (i,j,k) scan.
struct NonAssociative : Error {
    int i, j, k;
    NonAssociative(int i_, int j_, int k_)
        : Error("non-associative: (" + std::to_string(i_) + "*" + std::to_string(j_) +
                ")*" + std::to_string(k_) + " != " + std::to_string(i_) + "*(" +
                std::to_string(j_) + "*" + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
};

struct IndexOutOfRange : Error {
    int row, col;
    IndexOutOfRange(int row_, int col_)
        : Error("table entry out of range at row " + std::to_string(row_) +
                ", col " + std::to_string(col_)),
          row(row_), col(col_) {}
};

struct UnknownName : Error {
    std::string name;
    explicit UnknownName(const std::string& n)
        : Error("unknown construction name: " + n), name(n) {}
};

struct EmptySeed : Error {
    EmptySeed() : Error("closure seed is empty") {}
};

struct SizeBoundExceeded : Error {
    int size, bound;
    SizeBoundExceeded(int size_, int bound_)
        : Error("embedding search limited to order " + std::to_string(bound_) +
                ", got " + std::to_string(size_)),
          size(size_), bound(bound_) {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& detail)
        : Error("syntax error at position " + std::to_string(pos) + ": " + detail),
          position(pos) {}
};

struct UnboundVariable : Error {
    int variable;
    explicit UnboundVariable(int var)
        : Error("assignment does not bind variable id " + std::to_string(var)),
          variable(var) {}
};

struct PatternMismatch : Error {
    std::size_t position;
    explicit PatternMismatch(std::size_t pos)
        : Error("rule pattern does not match at position " + std::to_string(pos)),
          position(pos) {}
};

struct PositionOutOfRange : Error {
    std::size_t position;
    explicit PositionOutOfRange(std::size_t pos)
        : Error("rewrite position out of range: " + std::to_string(pos)),
          position(pos) {}
};

struct NotConnected : Error {
    NotConnected() : Error("word is not connected") {}
};

struct SameVariable : Error {
    SameVariable() : Error("the two variables must be distinct") {}
};

struct VariableAbsent : Error {
    int variable;
    explicit VariableAbsent(int var)
        : Error("variable id " + std::to_string(var) + " does not occur in the word"),
          variable(var) {}
};

struct NotAWitness : Error {
    NotAWitness() : Error("element satisfies t^2 = t^3; not an eq4 witness") {}
};

struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& detail)
        : Error("internal invariant violation: " + detail) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& detail)
        : Error("invalid Rees spec: " + detail) {}
};

struct NotCompletelyZeroSimple : Error {
    NotCompletelyZeroSimple() : Error("semigroup is not completely 0-simple") {}
};

// File-level problems: unreadable file, malformed structure, trailing garbage.
struct IoError : Error {
    explicit IoError(const std::string& detail) : Error(detail) {}
};

}  // namespace sgp
