#pragma once

#include <stdexcept>
#include <string>

namespace qgen {

// Base class for all library errors. code() is the stable machine-readable
// name surfaced in CLI JSON output and exit-code mapping.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
    virtual const char* code() const noexcept { return "Error"; }
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what_arg) : Error(what_arg) {}
    const char* code() const noexcept override { return "DomainError"; }
};

// Series inversion requested for a series whose constant term has no inverse
// in the coefficient ring.
class NonInvertibleConstantTerm : public Error {
public:
    explicit NonInvertibleConstantTerm(const std::string& what_arg) : Error(what_arg) {}
    const char* code() const noexcept override { return "NonInvertibleConstantTerm"; }
};

// Evaluation requested exactly at a pole.
class PoleAt : public Error {
public:
    explicit PoleAt(const std::string& where) : Error("pole at " + where) {}
    const char* code() const noexcept override { return "PoleAt"; }
};

// A monitored lattice sum failed its decay criterion.
class DivergentTail : public Error {
public:
    explicit DivergentTail(const std::string& what_arg) : Error(what_arg) {}
    const char* code() const noexcept override { return "DivergentTail"; }
};

}  // namespace qgen
