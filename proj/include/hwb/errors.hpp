#pragma once

#include <stdexcept>
#include <string>

namespace hwb {

// Bad input data: failed invariants, malformed tables, non-prime moduli.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A size/work cap was exceeded; the message names the admissible bound.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hwb
