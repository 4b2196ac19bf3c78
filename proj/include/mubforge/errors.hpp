#pragma once

#include <stdexcept>
#include <string>

namespace mubforge {

/// Bad user input (composite p, out-of-range index, malformed artifact file).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit was exceeded (field too large, scan too big).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact identity that must hold by construction failed to verify.
/// Raising this signals an arithmetic bug, not a user mistake.
class certification_error : public std::runtime_error {
public:
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mubforge
