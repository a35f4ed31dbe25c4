#pragma once

#include <stdexcept>
#include <string>

namespace amrtriad {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (negative population, boundary value where an open interval is required, ...).
struct DomainError : Error {
    using Error::Error;
};

// A parameter combination is invalid as a whole (nonpositive N, gamma+mu = 0,
// negative discriminant, unknown generator id, ...).
struct ParameterError : Error {
    using Error::Error;
};

// A requested equilibrium or persistence level does not exist because the
// relevant threshold is not above 1.
struct NoEquilibriumError : Error {
    using Error::Error;
};

// A time step is too large for the integrator to keep the state inside (0, N).
// Carries a suggested replacement step.
struct StepSizeError : Error {
    double suggested_dt;
    StepSizeError(const std::string& what, double suggested)
        : Error(what), suggested_dt(suggested) {}
};

// A time grid is unusable (inverted bounds, nonpositive step, or more points
// than the full-memory fractional solver is willing to hold).
struct GridError : Error {
    using Error::Error;
};

// A function value exceeds the representable range.
struct RangeError : Error {
    using Error::Error;
};

// A scenario configuration document is malformed; `key` names the offending
// entry when one can be identified.
struct ConfigError : Error {
    std::string key;
    explicit ConfigError(const std::string& what, std::string key_path = "")
        : Error(what), key(std::move(key_path)) {}
};

}  // namespace amrtriad
