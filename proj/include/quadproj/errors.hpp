#pragma once

#include <stdexcept>
#include <string>

namespace quadproj {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input matrix violates the symmetry tolerance.
struct NotSymmetric : Error {
    using Error::Error;
};

/// The eigensolver failed to converge (pathological input).
struct NoConvergence : Error {
    using Error::Error;
};

/// The quadratic part A is identically zero.
struct ZeroQuadratic : Error {
    using Error::Error;
};

/// A is singular: the quadric has no (unique) center.
struct NotCentral : Error {
    using Error::Error;
};

/// The quadric is cylindrical (translational invariance directions).
struct Cylindrical : Error {
    using Error::Error;
};

/// gamma = c - b'A^{-1}b/4 vanishes: conical, not central.
struct ConicalDegenerate : Error {
    using Error::Error;
};

/// The quadric has no real points.
struct EmptyQuadric : Error {
    using Error::Error;
};

/// Secular function evaluated too close to an active pole.
struct PoleEvaluation : Error {
    using Error::Error;
};

/// Root finder exceeded its iteration cap.
struct MaxIterations : Error {
    using Error::Error;
};

/// Hyperplane normal vector is zero.
struct ZeroNormal : Error {
    using Error::Error;
};

/// Oracle invoked beyond its cost guard.
struct CostGuard : Error {
    using Error::Error;
};

/// Operation not available for this dimension or quadric type.
struct Unsupported : Error {
    using Error::Error;
};

/// Candidate set came out empty; must be unreachable.
struct InternalNoCandidate : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace quadproj
