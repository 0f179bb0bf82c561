#pragma once

#include <stdexcept>
#include <string>

namespace cowkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Out-of-range vertex, invalid partition, malformed argument.
struct DomainError : Error {
    using Error::Error;
};

// A configured size limit was exceeded; the caller asked for more than the
// exact solvers are willing to attempt. Never silently approximated.
struct LimitError : Error {
    using Error::Error;
};

// A polynomial solver was applied to a graph outside its class.
struct ClassificationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t at)
        : Error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

} // namespace cowkit
