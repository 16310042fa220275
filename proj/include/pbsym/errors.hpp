#pragma once

#include <stdexcept>
#include <string>

namespace pbsym {

// Base class for every error raised by the engine.
struct engine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values: zero division, invalid parameters, wrong variable count.
struct value_error : engine_error {
    using engine_error::engine_error;
};

// Raised when inverting a scalar that is a sum of more than one radical term.
struct inverse_of_sum_error : engine_error {
    using engine_error::engine_error;
};

// Raised when adding function-space elements whose Gaussian exponents differ
// or whose prefactor exponents cannot be aligned over the integers.
struct incompatible_sum_error : engine_error {
    using engine_error::engine_error;
};

// Raised when an exact inner product does not converge (total Gaussian
// exponent >= 0) or has a non-integer prefactor power.
struct divergent_integral_error : engine_error {
    using engine_error::engine_error;
};

// Raised by the exact operator exponential when the series fails to
// terminate within the iteration bound; carries the first surviving
// residual term as a witness.
struct nontermination_error : engine_error {
    std::string witness;
    nontermination_error(const std::string& msg, std::string w)
        : engine_error(msg), witness(std::move(w)) {}
};

// Syntax errors from the operator DSL, with a 0-based input position.
struct parse_error : engine_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : engine_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Invalid suite configuration (maps to CLI exit code 2).
struct config_error : engine_error {
    using engine_error::engine_error;
};

}
