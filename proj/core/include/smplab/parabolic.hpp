#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "smplab/operators.hpp"

namespace smplab {

/// Heat problem u_t - Lap u = f with Dirichlet walls, theta-scheme in time.
/// theta in [1/2, 1] keeps the step unconditionally stable; the propagator is
/// additionally order-preserving (entrywise nonnegative) when the explicit
/// factor stays nonnegative, i.e. unconditionally at theta = 1 and for
/// dt <= h^2 / (2 (1-theta) d) otherwise.
struct ParabolicProblem {
    MeshPtr mesh;
    ScalarField u0;
    ScalarField forcing;                                       // time-independent part
    std::function<void(double, ScalarField&)> forcing_of_t;    // optional override
    double dt = 1e-3;
    double theta = 0.5;
    double horizon = 1.0;

    ParabolicProblem(MeshPtr mesh_, ScalarField u0_, ScalarField forcing_, double dt_,
                     double theta_, double horizon_);
};

/// One-step theta-scheme engine.
class ThetaScheme {
public:
    ThetaScheme(const ParabolicProblem& p, const Tolerances& tol = {});

    /// Advances state from time t to t + dt.
    void step(ScalarField& state, double t) const;

private:
    const ParabolicProblem& p_;
    Tolerances tol_;
};

struct PositivityTrace {
    std::vector<double> times;
    std::vector<double> min_interior;
    std::vector<double> dist_to_stationary;  // sup |u(t) - u_inf|
    std::optional<double> t0;          // empty = NotReached
    double stationary_min = 0.0;       // min of the stationary solve for the forcing
    double u0_phi1_inner = 0.0;        // recorded <u0, phi1>
    double decay_rate = 0.0;           // fitted tail rate of |u - u_inf|
    double decay_prefactor = 0.0;
    double decay_fit_residual = 0.0;
    bool hypothesis_warning = false;   // stationary floor not positive
};

/// Integrates to the horizon and locates the earliest grid time after which
/// the interior minimum stays positive. The stationary minimum is attached as
/// the persistence justification; a nonpositive stationary floor demotes the
/// result to a warning (detection still runs).
PositivityTrace find_positivity_time(const ParabolicProblem& p, const Tolerances& tol = {});

struct DecayFit {
    double rate = 0.0;
    double prefactor = 0.0;       // C with |w| <= C |u0|_2 e^{-lambda2 t} phi1
    double fit_residual = 0.0;
    bool bound_ok = false;
    double lambda2 = 0.0;
};

/// Homogeneous flow of phi1-orthogonal data: fits the decay rate of
/// sup_x |w|/phi1 over the tail window and checks the pointwise
/// C e^{-lambda2 t} phi1 envelope. Data with a phi1 component raises
/// OrthogonalityViolated.
DecayFit verify_decay_estimate(const MeshPtr& mesh, const ScalarField& u0_hat, double dt,
                               double theta, double horizon, const Tolerances& tol = {});

/// Removes the phi1 component; returns the projection coefficient.
double project_orthogonal(ScalarField& u0, const EigenPair& phi1);

}  // namespace smplab
