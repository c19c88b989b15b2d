#pragma once

#include <stdexcept>
#include <string>

namespace vcn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A token could not be read at all.
struct SyntaxError : Error {
    using Error::Error;
};

/// A code violates a structural invariant (id multiplicity, sign/sense pairing).
struct ValidationError : Error {
    using Error::Error;
};

/// An operation that requires a proper diagram was given one with a cyclic long arc.
struct NotProper : Error {
    using Error::Error;
};

/// An operation that requires a special diagram was given a non-special one.
struct NotSpecial : Error {
    using Error::Error;
};

/// Requested random diagram shape cannot be realized.
struct InfeasibleShape : Error {
    using Error::Error;
};

/// Polynomial is not of the form eps * t^alpha * (t-1)^beta.
struct NotOfForm : Error {
    using Error::Error;
};

/// Zero input where a nonzero polynomial is required.
struct ZeroInput : Error {
    using Error::Error;
};

/// Two independently computed quantities that must agree do not; indicates a bug.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct NotMDiagram : Error {
    using Error::Error;
};

/// The crossing/critical-arc pairing is not unique (per M != 1).
struct PairingAmbiguous : Error {
    using Error::Error;
};

/// Geometric (epsilon, beta) disagrees with the det T factorization.
struct CrossCheckMismatch : Error {
    using Error::Error;
};

/// Pre-critical and post-critical selectors mixed in one sum.
struct KindMismatch : Error {
    using Error::Error;
};

struct SameArc : Error {
    using Error::Error;
};

/// Selector out of range, critical, or otherwise unusable for a sum.
struct InvalidSelector : Error {
    using Error::Error;
};

struct UnknownBase : Error {
    using Error::Error;
};

struct InvalidSite : Error {
    using Error::Error;
};

}  // namespace vcn
