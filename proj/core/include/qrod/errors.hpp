#pragma once

#include <stdexcept>
#include <string>

namespace qrod {

/// Rejected physical input: a parameter or argument outside its admissible range.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is requested past the breakdown of the
/// short-time propagator. Carries the dimensionless validity ratio
/// 2*hbar*sinh(Omega*t)/(M*a^2*Omega) that triggered the rejection.
class ValidityError : public std::runtime_error {
public:
    ValidityError(const std::string& msg, double ratio)
        : std::runtime_error(msg), ratio_(ratio) {}

    double ratio() const { return ratio_; }

private:
    double ratio_;
};

/// Linear-solver failure, with the offending pivot magnitude for diagnostics.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, std::size_t row, double pivot_magnitude)
        : std::runtime_error(msg), row_(row), pivot_magnitude_(pivot_magnitude) {}

    std::size_t row() const { return row_; }
    double pivot_magnitude() const { return pivot_magnitude_; }

private:
    std::size_t row_;
    double pivot_magnitude_;
};

/// Invalid run configuration. The message aggregates every problem found,
/// one per line, so a bad config is reported in a single pass.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qrod
