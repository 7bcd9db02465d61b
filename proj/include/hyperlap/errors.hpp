#pragma once

#include <stdexcept>
#include <string>

namespace hyperlap {

// Base class for every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the supported domain (wrong dimension, d out of
// range, angle outside its interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// An evaluation was requested at (or numerically indistinguishable from) the
// kernel singularity.
class SingularityError : public Error {
public:
    using Error::Error;
};

// An iterative scheme failed to reach the requested tolerance within its
// budget.  Carries the best estimate obtained so far and its error estimate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double partial, double est_error)
        : Error(what), partial_(partial), est_error_(est_error) {}

    double partial() const noexcept { return partial_; }
    double est_error() const noexcept { return est_error_; }

private:
    double partial_;
    double est_error_;
};

// A route was invoked outside the region where it is valid or accurate.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Two internal evaluations that must agree did not (self-check failed).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperlap
