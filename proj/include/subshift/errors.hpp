#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

// Error categories, one per CLI exit code: usage errors are handled by the
// argument parser (exit 1); these cover the rest.

// Invalid parameters, malformed shapes, out-of-range cells, undersized
// windows. Exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A dyadic point does not carry enough random bits for the requested
// window. Exit code 3.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File and parse failures. Exit code 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace subshift
