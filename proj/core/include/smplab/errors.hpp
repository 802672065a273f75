#pragma once

#include <stdexcept>
#include <string>

namespace smplab {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- forcing / quadrature ---------------------------------------------------

class NonIntegrableSingularity : public Error {
public:
    using Error::Error;
};

// -- 1d solver ----------------------------------------------------------------

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class SignStructureViolation : public Error {
public:
    using Error::Error;
};

class PrerequisiteFailed : public Error {
public:
    using Error::Error;
};

class NotFlat : public Error {
public:
    using Error::Error;
};

class NoSignChange : public Error {
public:
    using Error::Error;
};

// -- grid / linear algebra ----------------------------------------------------

class SolverDiverged : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class MeshMisaligned : public Error {
public:
    using Error::Error;
};

// -- maximum-principle machinery ----------------------------------------------

class BallNotInterior : public Error {
public:
    using Error::Error;
};

class DegenerateRatio : public Error {
public:
    using Error::Error;
};

class SubsolutionCheckFailed : public Error {
public:
    using Error::Error;
};

class CertificateFailed : public Error {
public:
    using Error::Error;
};

// -- semilinear -----------------------------------------------------------------

class PositivityPrerequisiteFailed : public Error {
public:
    using Error::Error;
};

class ResolventNotPositive : public Error {
public:
    using Error::Error;
};

class BracketViolated : public Error {
public:
    using Error::Error;
};

// -- parabolic ------------------------------------------------------------------

class OrthogonalityViolated : public Error {
public:
    using Error::Error;
};

/// Three-valued outcome of a condition check. `Marginal` means the margin is
/// within tolerance of equality, so neither strict verdict is trustworthy.
enum class Verdict { Holds, Fails, Marginal };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Fails: return "Fails";
        case Verdict::Marginal: return "Marginal";
    }
    return "?";
}

}  // namespace smplab
