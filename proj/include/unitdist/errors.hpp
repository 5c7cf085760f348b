#pragma once

#include <stdexcept>
#include <string>

namespace unitdist {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed inputs: incompatible towers, wrong point counts, missing labels,
// unparseable files.
struct StructuralError : Error {
    using Error::Error;
};

// Arithmetic domain violations: inverse of zero, sqrt of a non-positive
// element, PythagSub with a <= b.
struct DomainError : Error {
    using Error::Error;
};

// A documented operation precondition does not hold (endpoint distance
// mismatch, proposition premises violated).
struct PreconditionError : Error {
    using Error::Error;
};

// Resource guard tripped: witness-set depth limit exceeded.
struct CapacityError : Error {
    using Error::Error;
};

// Bounded search ran out of room (says nothing about existence).
struct SearchExhaustedError : Error {
    using Error::Error;
};

// Unsupported configuration (e.g. several symbolic entries in one matrix).
struct UnsupportedError : Error {
    using Error::Error;
};

// Command-line usage problems; maps to exit code 64.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace unitdist
