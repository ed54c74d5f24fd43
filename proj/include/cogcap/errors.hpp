#pragma once

#include <stdexcept>
#include <string>

namespace cogcap {

// Unknown variable name in a tensor or group.
class NameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Bad argument value (overlapping groups, weights out of range, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Shape mismatch between tensors, channels and distributions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or invalid channel file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested enumeration exceeds the allowed work budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cogcap
