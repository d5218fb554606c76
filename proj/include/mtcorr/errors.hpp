#pragma once

#include <stdexcept>
#include <string>

namespace mtcorr {

/// Magnus series requested beyond its convergence radius (tau >= 1) without
/// interval splitting.
struct ConvergenceGateViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed Magnus term deviates from the even/odd matrix structure by more
/// than the tolerance; indicates an implementation bug, never a physics effect.
struct StructureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation time outside the tabulated grid of a MagnusSeries.
struct GridRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Objects built from different ModelParams were combined.
struct ParamMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Step-halving integrator hit its refinement cap before reaching the
/// requested tolerance.
struct ToleranceNotReached : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Container sizes disagree (displacement count vs. time-point count, ...).
struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix that must be Hermitian (within tolerance) is not.
struct NonHermitianInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Truncated Fock space too small for the requested evolution: population of
/// the top levels exceeds the leakage bound.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mtcorr
