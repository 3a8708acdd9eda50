#pragma once

#include <stdexcept>
#include <string>

namespace kinkzeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the supported range (k >= 1, Im tau <= 0, ...).
struct DomainError : Error { using Error::Error; };
// Evaluation at or too close to a singularity.
struct PoleError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
// Non-integrable endpoint singularity hit by a contour integral.
struct BranchCollisionError : Error { using Error::Error; };
// Two solutions became linearly dependent (band edge).
struct DegenerateError : Error { using Error::Error; };
struct NotFoundError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };
struct DivergentError : Error { using Error::Error; };

}  // namespace kinkzeta
