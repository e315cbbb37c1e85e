#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaingraph {

/// Invalid graph construction or a precondition on graph arguments.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed TGG / JSON input. `line()` is 1-based, or 0 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double off_norm) : NumericalError(what), off_norm_(off_norm) {}
    double off_norm() const { return off_norm_; }

private:
    double off_norm_;
};

class PairingError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace gaingraph
