#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ordcalc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad syntax, arity or shape violations.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Syntactically broken DSL input, with a source position.
struct ParseError : ValidationError {
    ParseError(const std::string& msg, int line, int col)
        : ValidationError(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

// Well-formed input outside an operation's domain (e.g. a nonlinear term
// passed to a condensation).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Relation closure produced a cycle; carries one offending cycle.
struct CycleError : ValidationError {
    CycleError(const std::string& msg, std::vector<int> cycle)
        : ValidationError(msg), cycle(std::move(cycle)) {}
    std::vector<int> cycle;
};

} // namespace ordcalc
