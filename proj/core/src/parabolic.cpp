#include "smplab/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smplab {

ParabolicProblem::ParabolicProblem(MeshPtr mesh_, ScalarField u0_, ScalarField forcing_,
                                   double dt_, double theta_, double horizon_)
    : mesh(std::move(mesh_)),
      u0(std::move(u0_)),
      forcing(std::move(forcing_)),
      dt(dt_),
      theta(theta_),
      horizon(horizon_) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (theta < 0.5 || theta > 1.0)
        throw std::invalid_argument("theta must lie in [1/2, 1] (unconditional stability range)");
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    if (u0.mesh->node_count() != mesh->node_count() ||
        forcing.mesh->node_count() != mesh->node_count())
        throw MeshMisaligned("initial datum / forcing live on a different mesh");
}

ThetaScheme::ThetaScheme(const ParabolicProblem& p, const Tolerances& tol) : p_(p), tol_(tol) {}

void ThetaScheme::step(ScalarField& state, double t) const {
    const double dt = p_.dt, th = p_.theta;
    const ScalarField au = laplacian_apply(state);

    ScalarField f_old = p_.forcing;
    ScalarField f_new = p_.forcing;
    if (p_.forcing_of_t) {
        p_.forcing_of_t(t, f_old);
        p_.forcing_of_t(t + dt, f_new);
    }

    ScalarField rhs(p_.mesh);
    const double c = 1.0 / (th * dt);
    for (int i = 0; i < rhs.size(); ++i) {
        if (p_.mesh->is_boundary(i)) continue;
        const double f_theta = th * f_new[i] + (1.0 - th) * f_old[i];
        rhs[i] = c * (state[i] - (1.0 - th) * dt * au[i] + dt * f_theta);
    }
    state = solve_shifted(rhs, -c, tol_);
}

PositivityTrace find_positivity_time(const ParabolicProblem& p, const Tolerances& tol) {
    PositivityTrace trace;
    const EigenPair eig1 = first_eigenpair(p.mesh, tol);
    trace.u0_phi1_inner = dot_volume(p.u0, eig1.field);

    const ScalarField v = solve_dirichlet(p.forcing, tol);
    trace.stationary_min = v.interior_min();
    trace.hypothesis_warning = !(trace.stationary_min > 0.0);

    const ThetaScheme scheme(p, tol);
    ScalarField u = p.u0;
    double t = 0.0;
    trace.times.push_back(t);
    trace.min_interior.push_back(u.interior_min());

    const int steps = static_cast<int>(std::ceil(p.horizon / p.dt - 1e-12));
    auto dist = [&] {
        double d = 0.0;
        for (int i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u[i] - v[i]));
        return d;
    };
    trace.dist_to_stationary.push_back(dist());
    for (int s = 0; s < steps; ++s) {
        scheme.step(u, t);
        t += p.dt;
        trace.times.push_back(t);
        trace.min_interior.push_back(u.interior_min());
        trace.dist_to_stationary.push_back(dist());
    }

    // earliest recorded time after which the interior minimum stays positive
    std::size_t last_bad = trace.times.size();
    for (std::size_t i = trace.times.size(); i-- > 0;) {
        if (trace.min_interior[i] <= 0.0) {
            last_bad = i;
            break;
        }
    }
    if (last_bad == trace.times.size()) {
        trace.t0 = 0.0;
    } else if (last_bad + 1 < trace.times.size()) {
        trace.t0 = trace.times[last_bad + 1];
    }  // else: still nonpositive at the horizon -> NotReached

    // tail fit of log |u - u_inf| (steady-state convergence rate)
    const std::size_t n = trace.times.size();
    const std::size_t tail0 = n / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t i = tail0; i < n; ++i) {
        if (trace.dist_to_stationary[i] < 1e-280) continue;
        const double x = trace.times[i], y = std::log(trace.dist_to_stationary[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt >= 2 && sxx * cnt - sx * sx > 0.0) {
        const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        const double icept = (sy - slope * sx) / cnt;
        trace.decay_rate = -slope;
        trace.decay_prefactor = std::exp(icept);
        double res = 0.0;
        for (std::size_t i = tail0; i < n; ++i) {
            if (trace.dist_to_stationary[i] < 1e-280) continue;
            const double pred = icept + slope * trace.times[i];
            res = std::max(res, std::abs(pred - std::log(trace.dist_to_stationary[i])));
        }
        trace.decay_fit_residual = res;
    }
    return trace;
}

DecayFit verify_decay_estimate(const MeshPtr& mesh, const ScalarField& u0_hat, double dt,
                               double theta, double horizon, const Tolerances& tol) {
    const EigenPair eig1 = first_eigenpair(mesh, tol);
    const EigenPair eig2 = second_eigenpair(mesh, eig1, tol);

    const double inner = dot_volume(u0_hat, eig1.field);
    const double norms = norm_l2(u0_hat) * norm_l2(eig1.field);
    if (std::abs(inner) > 1e-10 * std::max(norms, 1e-300))
        throw OrthogonalityViolated("initial datum has a first-eigenfunction component");

    DecayFit fit;
    fit.lambda2 = eig2.value;

    ParabolicProblem p(mesh, u0_hat, ScalarField(mesh), dt, theta, horizon);
    const ThetaScheme scheme(p, tol);
    ScalarField w = u0_hat;
    double t = 0.0;

    auto sup_ratio = [&](const ScalarField& field) {
        double r = 0.0;
        for (int i = 0; i < field.size(); ++i) {
            if (mesh->is_boundary(i)) continue;
            r = std::max(r, std::abs(field[i]) / eig1.field[i]);
        }
        return r;
    };

    std::vector<double> times{0.0};
    std::vector<double> ratios{sup_ratio(w)};
    const int steps = static_cast<int>(std::ceil(horizon / dt - 1e-12));
    for (int s = 0; s < steps; ++s) {
        scheme.step(w, t);
        t += dt;
        times.push_back(t);
        ratios.push_back(sup_ratio(w));
    }

    const std::size_t n = times.size();
    const std::size_t tail0 = n / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t i = tail0; i < n; ++i) {
        if (ratios[i] < 1e-280) continue;
        const double x = times[i], y = std::log(ratios[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt < 2 || !(sxx * cnt - sx * sx > 0.0))
        throw Error("decay fit window carries no usable samples");
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    const double icept = (sy - slope * sx) / cnt;
    fit.rate = -slope;
    double res = 0.0;
    for (std::size_t i = tail0; i < n; ++i) {
        if (ratios[i] < 1e-280) continue;
        res = std::max(res, std::abs(icept + slope * times[i] - std::log(ratios[i])));
    }
    fit.fit_residual = res;

    // pointwise envelope constant over the tail
    const double u0_l2 = std::max(norm_l2(u0_hat), 1e-300);
    double C = 0.0;
    for (std::size_t i = tail0; i < n; ++i)
        C = std::max(C, ratios[i] * std::exp(fit.lambda2 * times[i]) / u0_l2);
    fit.prefactor = C;

    bool envelope_ok = true;
    for (std::size_t i = tail0; i < n; ++i) {
        if (ratios[i] > C * u0_l2 * std::exp(-fit.lambda2 * times[i]) * (1.0 + 1e-9))
            envelope_ok = false;
    }
    fit.bound_ok = envelope_ok && fit.rate >= fit.lambda2 * (1.0 - 0.02);
    return fit;
}

double project_orthogonal(ScalarField& u0, const EigenPair& phi1) {
    const double c = dot_volume(u0, phi1.field) / dot_volume(phi1.field, phi1.field);
    for (int i = 0; i < u0.size(); ++i) u0[i] -= c * phi1.field[i];
    return c;
}

}  // namespace smplab
