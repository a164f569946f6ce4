#pragma once

#include <stdexcept>
#include <string>

namespace mrpsim {

/// Base class for every error this library raises on purpose.
class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Principal angle too close to a full revolution; tan(phi/4) diverges.
class SingularRotation : public SimError {
public:
    using SimError::SimError;
};

/// Shadow set of the identity orientation is undefined.
class ZeroNormMrp : public SimError {
public:
    using SimError::SimError;
};

/// Quaternion-to-MRP projection at b0 = -1 (360 degree rotation).
class SingularProjection : public SimError {
public:
    using SimError::SimError;
};

/// History lookup outside the retained delay window.
class QueryTooOld : public SimError {
public:
    using SimError::SimError;
};

/// Integration produced a NaN or infinity; the run diverged.
class NonFiniteState : public SimError {
public:
    using SimError::SimError;
};

/// MRP norm exceeded the blow-up bound without a set switch.
class SingularMrp : public SimError {
public:
    using SimError::SimError;
};

/// Scenario document is syntactically malformed.
class ParseError : public SimError {
public:
    using SimError::SimError;
};

/// Scenario document violates a configuration invariant.
class ValidationError : public SimError {
public:
    using SimError::SimError;
};

} // namespace mrpsim
