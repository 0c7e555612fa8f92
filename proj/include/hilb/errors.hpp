#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

// Malformed or mathematically inadmissible input (bad syntax, ring mismatch,
// heterogeneous generators where homogeneous ones are required, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured computation cap was exceeded (Groebner basis size/degree,
// Hom truncation).  Distinguishable from InputError so callers can map it
// to a dedicated exit code.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hilb
