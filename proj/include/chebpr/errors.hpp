#pragma once

#include <stdexcept>
#include <string>

namespace chebpr {

// Base class for all library errors. CLI maps subclasses to exit codes:
// everything below except NumericError is an input problem (exit 1),
// NumericError is a computation failure (exit 2).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

}  // namespace chebpr
