#pragma once

#include <stdexcept>
#include <string>

namespace mfx {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that does not parse or violates a schema. CLI maps this to exit 2.
struct InputError : Error {
    using Error::Error;
};

struct RingMismatchError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct KernelNonzeroError : Error {
    using Error::Error;
};

struct NotAnnihilatedError : Error {
    using Error::Error;
};

struct LayerNotMFError : Error {
    explicit LayerNotMFError(int layer, const std::string& msg)
        : Error(msg), layer(layer) {}
    int layer;
};

// An internal construction produced something that failed its own
// verification. Always a bug, never a valid-input condition.
struct InternalCheckError : Error {
    using Error::Error;
};

}  // namespace mfx
