#pragma once

#include <stdexcept>
#include <string>

namespace debox {

// Thrown when a vector's length disagrees with the domain dimensionality.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown for invalid run/grid configuration (parameter out of range, population
// too small for the chosen mutation, budget smaller than the population, ...).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown for invalid arguments to analysis routines (empty series, probability
// outside [0,1], ...).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an input file (results CSV, grid config) cannot be parsed or
// violates a value-range constraint. Messages name the offending location.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation produces non-finite values where finite ones are
// required (e.g. an offspring coordinate overflowed). Signals an engine or
// input problem instead of silently repairing it.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace debox
