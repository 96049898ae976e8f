#ifndef HNCALC_ERRORS_HPP
#define HNCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hncalc {

// Precondition violations on numeric inputs (invalid spec fields, out-of-range
// indices). Mapped to exit code 2 by the CLI.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A piece sequence whose slopes are not non-increasing is not a
// Harder-Narasimhan sequence.
class InvalidFiltration : public DomainError {
public:
    using DomainError::DomainError;
};

// Numerically impossible cohomology-vanishing hypothesis (chi != 0).
class AdmissibilityError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace hncalc

#endif
