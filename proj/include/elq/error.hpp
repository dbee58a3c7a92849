#pragma once

#include <stdexcept>
#include <string>

namespace elq {

/// Malformed user input (bad multiplicity list, invalid config, p <= d, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A hypothesis the dimension theorems rely on did not hold for this system
/// (for instance b is undefined, or n falls outside [0, r-9]).
class PreconditionViolated : public std::logic_error {
public:
    explicit PreconditionViolated(const std::string& what)
        : std::logic_error("precondition violated: " + what) {}
};

/// Internal consistency failure: overflow, iteration cap, Riemann-Roch
/// divisibility, a closed formula returning a negative dimension.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace elq
