#ifndef SSMTHOM_ERRORS_HPP
#define SSMTHOM_ERRORS_HPP

#include <stdexcept>

namespace ssmthom {

// Mixing polynomials from different ring contexts.
struct ring_mismatch_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A substitution left a variable unbound (and it cannot be carried over).
struct substitution_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Series division by something without an invertible constant term.
struct not_invertible_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A binding or operand violates the grading contract.
struct grading_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ssmthom

#endif
