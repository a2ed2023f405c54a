#pragma once

#include <stdexcept>
#include <string>

namespace phasestar {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different phase spaces or parameter rings.
struct IncompatibleContext : Error {
    using Error::Error;
};

/// Variable index outside 0..2N-1.
struct BadVariable : Error {
    using Error::Error;
};

/// Parameter name not present in a series context.
struct UnknownParameter : Error {
    using Error::Error;
};

/// Map is not identity at zero parameter values, so it has no series inverse.
struct NotInvertible : Error {
    using Error::Error;
};

/// Operator-exponential generator with a nonzero h^0 part.
struct NonNilpotentGenerator : Error {
    using Error::Error;
};

/// Literal or scenario text that does not parse; carries a position.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace phasestar
