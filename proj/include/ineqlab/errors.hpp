#pragma once

#include <stdexcept>
#include <string>

namespace ineqlab {

/// Operand shapes do not fit together (vector lengths, non-square input).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its mathematical domain
/// (not Hermitian, not PSD, not a contraction, zero vector, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative kernel hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input: config files, matrix/vector JSON, I/O.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ineqlab
