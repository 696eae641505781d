#pragma once

#include <stdexcept>

namespace bondrisk {

// Bad contract terms, malformed input files, or out-of-domain arguments.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The target price has no yield inside the solver's bracket.
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The root finder hit its iteration cap before meeting the residual tolerance.
class SolverFailureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bondrisk
