#pragma once

#include <stdexcept>
#include <string>

namespace mstcover {

// Thrown by the brute-force oracles when an instance exceeds the
// enumeration guard (m <= 16 edges, q <= 16 sets, ground <= 12).
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

enum class InstanceErrorCode {
    Io,              // file missing / unreadable
    Malformed,       // not valid JSON or schema violation
    LengthMismatch,  // rank or cost vector length != m
    Disconnected,    // graph fails the connectivity invariant
    NonPositiveCost, // cost entry <= 0
};

// Instance/solution file errors carry a code so callers can map them to
// distinct exit codes without parsing messages.
class InstanceError : public std::runtime_error {
public:
    InstanceError(InstanceErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    InstanceErrorCode code() const { return code_; }

private:
    InstanceErrorCode code_;
};

} // namespace mstcover
