#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace entgeo {

/// A precondition or parameter-domain violation (invalid class parameters,
/// argument outside the range of a group function, point outside the
/// parameter domain of a family, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation would overflow the representable exponent range. Raised instead
/// of letting infinities propagate into integrals.
class range_overflow_error : public std::range_error {
public:
    explicit range_overflow_error(const std::string& what) : std::range_error(what) {}
};

/// A quadrature or iterative scheme did not reach its requested tolerance.
/// Carries the tolerance that was achieved when refinement was exhausted.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double achieved, double requested)
        : std::runtime_error(what), achieved_tolerance(achieved), requested_tolerance(requested) {}

    double achieved_tolerance;
    double requested_tolerance;
};

/// A matrix that must be symmetric positive definite is not. Carries the
/// offending spectrum so callers can see how the failure happened.
class not_positive_definite : public std::runtime_error {
public:
    not_positive_definite(const std::string& what, std::vector<double> spectrum)
        : std::runtime_error(what), eigenvalues(std::move(spectrum)) {}

    std::vector<double> eigenvalues;
};

} // namespace entgeo
