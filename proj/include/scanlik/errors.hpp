#pragma once

#include <stdexcept>
#include <string>

namespace scanlik {

struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfBoundsError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Non-finite values produced by a numeric kernel; message carries the inputs.
struct NumericDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComparisonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptimizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace scanlik
