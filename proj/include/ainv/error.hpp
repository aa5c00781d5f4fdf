#pragma once

#include <stdexcept>
#include <string>

namespace ainv {

/// A numeric argument lies outside the domain of the operation.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configuration (file, grid, experiment setup) is unusable.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A statistic is undefined for the given sample (e.g. zero variance).
class DegenerateSample : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ainv
