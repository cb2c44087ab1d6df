#pragma once

#include <stdexcept>
#include <string>

namespace kashina {

/// Operand shapes do not match the operation's contract.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested computation would exceed a configured size ceiling.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data rejected before construction (failed validation).
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency axiom failed; signals a bug upstream of the caller.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kashina
