#pragma once

#include <stdexcept>
#include <string>

namespace lpc {

// Reading malformed s-expression input. Carries 1-based line/column of the
// offending token so CLI diagnostics can point at it.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line, int col)
        : std::runtime_error(std::move(msg)), line(line), col(col) {}
    int line;
    int col;
};

// A connective applied to operands of the wrong mode, or a persistent
// sequent containing a linear proposition.
class mode_error : public std::runtime_error {
public:
    explicit mode_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A finite-model construction would exceed the configured carrier bound
// (powersets and vector enumerations grow exponentially).
class domain_too_large : public std::runtime_error {
public:
    explicit domain_too_large(const std::string& msg) : std::runtime_error(msg) {}
};

// A model was asked for structure it does not carry (e.g. negation data in
// the lattice model). Names the missing component.
class unsupported_structure : public std::runtime_error {
public:
    explicit unsupported_structure(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lpc
