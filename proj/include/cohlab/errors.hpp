// Error taxonomy. The CLI maps these onto exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace cohlab {

// Shape/basis mismatches and malformed input containers.
class structural_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A physical invariant (hermiticity, trace, positivity, normalization) failed.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature or series evaluation did not converge, or a value that must be
// real carries too much imaginary residue.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fock-space truncation could not reach the requested tail mass.
class truncation_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// Two algebraically equivalent evaluation routes disagreed. Signals a bug
// (typically a square-root branch mistake), never a property of the input.
class consistency_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

}  // namespace cohlab
