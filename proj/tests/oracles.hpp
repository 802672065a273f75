#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "smplab/semilinear.hpp"

namespace testutil {

/// Damped Newton for the discrete semilinear system on an interval mesh.
/// Independent of the production path: its own Jacobian assembly and
/// tridiagonal elimination, with a Levenberg-style shift (the Jacobian at the
/// subsolution carries a near-zero mode) and a sup-norm line search.
inline smplab::ScalarField semilinear_newton_oracle(const smplab::SemilinearProblem& p,
                                                    const smplab::ScalarField& start) {
    using smplab::ScalarField;
    const smplab::Mesh& m = *p.mesh;
    if (m.kind() != smplab::Mesh::Kind::Interval)
        throw std::invalid_argument("newton oracle expects an interval mesh");
    const int n = m.nx();
    const double ih2 = 1.0 / (m.spacing() * m.spacing());
    ScalarField u = start;
    for (int i = 1; i < n; ++i) u[i] *= 1.5;  // lift off the degenerate linearization

    auto residual_vec = [&](const ScalarField& v) {
        ScalarField r(p.mesh);
        for (int i = 1; i < n; ++i) {
            const double av = (2.0 * v[i] - v[i - 1] - v[i + 1]) * ih2;
            r[i] = av - p.lambda * v[i] - p.m[i] * std::pow(std::max(v[i], 0.0), p.alpha);
        }
        return r;
    };
    auto sup = [&](const ScalarField& v) {
        double s = 0.0;
        for (int i = 1; i < n; ++i) s = std::max(s, std::abs(v[i]));
        return s;
    };

    const double jac_floor = 1e-10 * start.sup_norm();
    double tau = 0.0;
    for (int it = 0; it < 500; ++it) {
        const auto F = residual_vec(u);
        const double fn = sup(F);
        if (fn < 1e-13 * (p.m.sup_norm() + p.lambda) * std::max(u.sup_norm(), 1e-300)) break;

        std::vector<double> diag(n - 1), rhs(n - 1), c(n - 1);
        for (int i = 1; i < n; ++i) {
            const double ui = std::max(u[i], jac_floor);
            diag[i - 1] =
                2.0 * ih2 - p.lambda - p.alpha * p.m[i] * std::pow(ui, p.alpha - 1.0) + tau;
            rhs[i - 1] = -F[i];
        }
        bool pivot_ok = diag[0] > 0.0;
        if (pivot_ok) {
            c[0] = -ih2 / diag[0];
            rhs[0] /= diag[0];
            for (int i = 1; i < n - 1; ++i) {
                const double piv = diag[i] + ih2 * c[i - 1];
                if (piv <= 0.0) {
                    pivot_ok = false;
                    break;
                }
                c[i] = -ih2 / piv;
                rhs[i] = (rhs[i] + ih2 * rhs[i - 1]) / piv;
            }
        }
        if (!pivot_ok) {
            tau = std::max(1.0, tau) * 10.0;
            continue;
        }
        for (int i = n - 3; i >= 0; --i) rhs[i] -= c[i] * rhs[i + 1];

        double s = 1.0;
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
            ScalarField trial = u;
            for (int i = 1; i < n; ++i) trial[i] = u[i] + s * rhs[i - 1];
            if (sup(residual_vec(trial)) < (1.0 - 0.1 * s) * fn) {
                u = trial;
                accepted = true;
                break;
            }
            s *= 0.5;
        }
        if (!accepted) {
            tau = std::max(1.0, tau) * 10.0;
        } else {
            tau *= 0.3;
        }
    }
    return u;
}

}  // namespace testutil
