#pragma once

#include <stdexcept>
#include <string>

namespace majordex {

// Base class of every error raised by the library. `code()` is a stable,
// machine-readable identifier used by the command-line front end.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A precondition on an argument was violated (parameter out of range,
// heterogeneous input where a homogeneous one is required, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("E_DOMAIN", message) {}
};

// An enumeration was refused because it exceeds the configured bound.
class BoundError : public Error {
public:
    explicit BoundError(const std::string& message) : Error("E_BOUND", message) {}
};

// Signals an arithmetic invariant that cannot fail on a correct build.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error("E_INTERNAL", message) {}
};

} // namespace majordex
