#ifndef SYMPQ_ERRORS_HPP
#define SYMPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sympq {

// Malformed matrices, mismatched variable counts and the like.
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

// Arguments outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation point hits a pole of the formula being evaluated.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// exact_divide left a nonzero remainder.
struct DivisibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A linear system that must be invertible was not; indicates a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace sympq

#endif
