#pragma once

#include <stdexcept>
#include <string>

namespace rgvcs {

// File or stream could not be read, written, or parsed.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact enumeration would exceed the configured state budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rgvcs
