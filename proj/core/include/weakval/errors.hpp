#pragma once

#include <stdexcept>
#include <string>

namespace weakval {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two kets were combined but live on different labeled bases.
struct BasisMismatchError : Error {
    using Error::Error;
};

/// A ket with zero norm cannot be normalized or used as a direction.
struct ZeroNormError : Error {
    using Error::Error;
};

/// Post-selection overlap vanished; the requested weak value is undefined.
struct OrthogonalPostSelectionError : Error {
    using Error::Error;
};

/// A basis passed as "complete" does not resolve the identity.
struct IncompleteBasisError : Error {
    using Error::Error;
};

/// The three-state Bargmann product vanished; the loop phase is undefined.
struct DegenerateLoopError : Error {
    using Error::Error;
};

/// Post-selected probe wave has (numerically) zero norm; nothing to sample.
struct ZeroNormPortError : Error {
    using Error::Error;
};

/// Defensive: neither output port carries probability.
struct BothPortsDarkError : Error {
    using Error::Error;
};

/// Fewer samples than the statistic requires.
struct InsufficientSamplesError : Error {
    using Error::Error;
};

/// A ratio estimator's denominator is statistically indistinguishable from zero.
struct DegenerateDenominatorError : Error {
    using Error::Error;
};

/// An estimator that divides by the coupling received g = 0.
struct ZeroCouplingError : Error {
    using Error::Error;
};

/// Accumulators combined by an estimator come from incompatible runs.
struct MismatchedRunsError : Error {
    using Error::Error;
};

/// Invalid run or command configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace weakval
