#pragma once

#include <stdexcept>
#include <string>

namespace crg {

/// A precondition on an argument was violated (bad dimension, non-fundamental discriminant, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An interval comparison could not be decided at the available precision.
class UndecidedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (field tables, JSON reports).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace crg
