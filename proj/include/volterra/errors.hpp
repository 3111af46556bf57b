#pragma once

#include <stdexcept>
#include <string>

namespace volterra {

/// Argument outside the mathematical domain of an operation (x <= 0 for a
/// kernel, alpha outside (0,1), sign-changing kernel where positivity is
/// required, divergent defining integral, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quadrature or evaluation did not reach the requested tolerance.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    /// Best error estimate (or residual) reached before giving up.
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Mismatched grids, malformed input and other caller mistakes.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// |1 + c w| vanished in a forward-substitution step.
class SingularStepError : public std::runtime_error {
public:
    SingularStepError(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Luxemburg functional stays above one for every admissible scale.
class UnboundedNormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace volterra
