#pragma once

#include <stdexcept>
#include <string>

namespace chebrad {

// Error taxonomy shared across the library. The CLI maps these onto its
// exit-code contract (usage = 1, out-of-theory = 2, resource = 3).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated.
struct invalid_argument : error {
    using error::error;
};

// Inputs are valid but lie outside the range the implemented theory covers.
struct out_of_theory : error {
    using error::error;
};

// A size guard was exceeded.
struct resource_limit : error {
    using error::error;
};

// An internal consistency check failed; indicates a bug, not a data condition.
struct internal_error : error {
    using error::error;
};

// A consistency check backed by a proved statement failed.
struct theorem_violation : internal_error {
    using internal_error::internal_error;
};

struct division_by_zero : error {
    using error::error;
};

}  // namespace chebrad
