#pragma once

#include <stdexcept>
#include <string>

namespace mvop {

/// Bad arguments or contract violations at the API boundary.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Linear system has no unique solution.
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The hypergeometric series does not terminate for the given data.
struct NonTruncating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The stacked boundary/truncation system failed to determine P(0).
struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Addition attempted between pi-graded scalars of different grade.
struct PiGradeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A normalization value that must be nonzero vanished.
struct NormalizationImpossible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mvop
