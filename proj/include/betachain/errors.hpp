#pragma once

#include <stdexcept>
#include <string>

namespace betachain {

// A numerical routine failed to reach its accuracy or convergence target.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested quantity is only defined for ergodic chains and the
// direction function failed the non-absorption condition.
struct ergodicity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace betachain
