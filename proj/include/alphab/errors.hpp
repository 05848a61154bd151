#pragma once

#include <stdexcept>
#include <string>

namespace alphab {

// Bad user-supplied data (files, CLI parameters, graphs that violate a
// precondition). The CLI maps this to exit code 1.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exact solver gave up because its time budget ran out.
struct solver_timeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace alphab
