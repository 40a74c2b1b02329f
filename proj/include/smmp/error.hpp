#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smmp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (non-coprime pair, a <= 0, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Blow-down of a chain produced a non-positive entry.
class DegenerateChain : public Error {
public:
    using Error::Error;
};

/// Operation applied to a value of the wrong kind, e.g. flipping a divisorial neighborhood.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Broken invariant inside the library. Seeing one is a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed text naming something invalid, e.g. a bar on a chain that is not a Wahl chain.
class SemanticError : public Error {
public:
    using Error::Error;
};

}  // namespace smmp
