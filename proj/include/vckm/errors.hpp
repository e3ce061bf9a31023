#pragma once

#include <stdexcept>
#include <string>

namespace vckm {

// Malformed input documents (graph files, instance files, flag values).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact computation would exceed its configured budget. Raised instead of
// ever returning an unverified answer.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vckm
