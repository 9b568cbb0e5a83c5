#pragma once

#include <stdexcept>
#include <string>

namespace stirmat {

// Index outside the stored rows, or m > n where the formula needs m <= n.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Operand orders do not agree.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A diagonal entry is not +1 or -1, so the inverse leaves the integers.
class NonInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested pair (or basis change) has no registered identity.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration was asked for an n above its configured bound.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact division left a remainder. Never caused by valid input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace stirmat
