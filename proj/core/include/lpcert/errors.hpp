#pragma once

#include <stdexcept>
#include <string>

namespace lpcert {

// Base for every failure this library reports deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

// A caller broke an operation's stated precondition (dimension mismatch,
// infeasible point, support violation, invalid parameter range, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Input size exceeds a hard enumeration or decomposition limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A self-check that is guaranteed by theory failed. Reaching this means the
// library itself is wrong, never the caller.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace lpcert
