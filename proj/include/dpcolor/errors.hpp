#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Lists / matchings inconsistent with the host graph.
class InstanceError : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition does not hold (list sizes, gadget shape, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would exceed its configured size limit.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

} // namespace dpc
