#include "smplab/semilinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smplab {

namespace {

double discrete_lambda1(const MeshPtr& mesh, const Tolerances& tol) {
    return first_eigenpair(mesh, tol).value;
}

}  // namespace

SemilinearProblem::SemilinearProblem(MeshPtr mesh_, ScalarField m_, double lambda_, double alpha_)
    : mesh(std::move(mesh_)), m(std::move(m_)), lambda(lambda_), alpha(alpha_) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("semilinear exponent must lie in (0,1)");
    if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
    if (m.mesh->node_count() != mesh->node_count())
        throw MeshMisaligned("weight field lives on a different mesh");
    bool has_positive = false;
    for (int i = 0; i < m.size(); ++i) {
        if (!mesh->is_boundary(i) && m[i] > 0.0) has_positive = true;
    }
    if (!has_positive)
        throw std::invalid_argument("weight must carry a positive region");
}

ScalarField build_subsolution_semilinear(const SemilinearProblem& p, const Tolerances& tol) {
    const ScalarField U = solve_dirichlet(p.m, tol);
    const double u_min = U.interior_min();
    if (!(u_min > 0.0))
        throw PositivityPrerequisiteFailed(
            "the linear solve for the weight is not positive inside the domain; the "
            "subsolution construction requires a positive profile");

    const double expo = 1.0 / (1.0 - p.alpha);
    ScalarField u0(p.mesh);
    for (int i = 0; i < u0.size(); ++i)
        u0[i] = std::pow(std::max((1.0 - p.alpha) * U[i], 0.0), expo);
    u0.zero_boundary();

    // discrete subsolution inequality with consistency slack
    const ScalarField au0 = laplacian_apply(u0);
    const double h = p.mesh->spacing();
    const double slack = tol.subsolution_slack * h * h *
                         (p.m.sup_norm() + p.lambda * u0.sup_norm() + u0.sup_norm() + 1.0);
    for (int i = 0; i < u0.size(); ++i) {
        if (p.mesh->is_boundary(i)) continue;
        const double rhs = p.lambda * u0[i] + p.m[i] * std::pow(u0[i], p.alpha);
        if (au0[i] > rhs + slack)
            throw SubsolutionCheckFailed("semilinear subsolution inequality failed at node " +
                                         std::to_string(i));
    }
    return u0;
}

ScalarField build_supersolution_semilinear(const SemilinearProblem& p, double* C_out,
                                           const Tolerances& tol) {
    if (p.lambda > 0.0) {
        const double l1 = discrete_lambda1(p.mesh, tol);
        if (!(p.lambda < l1))
            throw ResolventNotPositive("lambda must stay below the discrete first eigenvalue");
    }
    ScalarField one(p.mesh);
    for (int i = 0; i < one.size(); ++i) one[i] = p.mesh->is_boundary(i) ? 0.0 : 1.0;
    const ScalarField psi = solve_shifted(one, p.lambda, tol);

    const double m_sup = p.m.sup_norm();
    const double psi_sup = psi.sup_norm();
    double C = 1.01 * std::pow(m_sup * std::pow(psi_sup, p.alpha), 1.0 / (1.0 - p.alpha));
    if (!(C > 0.0)) C = 1.0;

    const ScalarField u0 = build_subsolution_semilinear(p, tol);
    for (int doubling = 0; doubling < 60; ++doubling) {
        bool dominates = true;
        for (int i = 0; i < u0.size(); ++i) {
            if (u0[i] > C * psi[i] + 1e-300) {
                dominates = false;
                break;
            }
        }
        if (dominates) {
            ScalarField sup(p.mesh);
            for (int i = 0; i < sup.size(); ++i) sup[i] = C * psi[i];
            if (C_out) *C_out = C;
            return sup;
        }
        C *= 2.0;
    }
    throw Error("supersolution constant escalation failed to dominate the subsolution");
}

double semilinear_residual(const SemilinearProblem& p, const ScalarField& u) {
    const ScalarField au = laplacian_apply(u);
    double r = 0.0;
    for (int i = 0; i < u.size(); ++i) {
        if (p.mesh->is_boundary(i)) continue;
        const double g = p.lambda * u[i] + p.m[i] * std::pow(std::max(u[i], 0.0), p.alpha);
        r = std::max(r, std::abs(au[i] - g));
    }
    return r;
}

BracketedSolution solve_bracketed(const SemilinearProblem& p, const BracketOptions& opts,
                                  const Tolerances& tol) {
    BracketedSolution out;
    out.sub = opts.sub ? *opts.sub : build_subsolution_semilinear(p, tol);
    out.sup = opts.sup ? *opts.sup : build_supersolution_semilinear(p, nullptr, tol);

    const Mesh& m = *p.mesh;
    const double h = m.spacing();
    for (int i = 0; i < out.sub.size(); ++i) {
        if (out.sub[i] > out.sup[i] + 1e-9 * out.sup.sup_norm())
            throw BracketViolated("bracket fields are not ordered");
    }

    // Lipschitz scale from the subsolution floor away from the boundary rim
    double floor = std::numeric_limits<double>::infinity();
    for (int i = 0; i < out.sub.size(); ++i) {
        if (m.distance(i) >= 2.0 * h - 1e-12 && !m.is_boundary(i))
            floor = std::min(floor, out.sub[i]);
    }
    if (!(floor > 0.0)) throw PositivityPrerequisiteFailed("subsolution floor is not positive");
    const double m_sup = p.m.sup_norm();
    double shift = p.lambda + p.alpha * m_sup * std::pow(floor, p.alpha - 1.0);

    const double scale_u = std::max(out.sup.sup_norm(), 1e-300);
    const double bracket_slack = 50.0 * h * h * scale_u;

    ScalarField u = out.sub;
    ScalarField rhs(p.mesh);
    int total_iters = 0;
    for (int escalation = 0; escalation <= 6; ++escalation) {
        bool diverged = false;
        double first_update = -1.0;
        double update = std::numeric_limits<double>::infinity();
        out.monotone_observed = true;
        for (int it = 0; it < tol.semilinear_max_iter; ++it) {
            for (int i = 0; i < rhs.size(); ++i) {
                rhs[i] = m.is_boundary(i)
                             ? 0.0
                             : (shift + p.lambda) * u[i] +
                                   p.m[i] * std::pow(std::max(u[i], 0.0), p.alpha);
            }
            ScalarField next = solve_shifted(rhs, -shift, tol);
            update = 0.0;
            for (int i = 0; i < next.size(); ++i) {
                update = std::max(update, std::abs(next[i] - u[i]));
                if (next[i] < u[i] - 1e-12 * scale_u) out.monotone_observed = false;
                if (next[i] < out.sub[i] - bracket_slack || next[i] > out.sup[i] + bracket_slack)
                    throw BracketViolated("iterate left the sub/supersolution bracket");
            }
            u = std::move(next);
            ++total_iters;
            if (first_update < 0.0) first_update = update;
            if (update > 20.0 * first_update && update > 1e-6 * scale_u) {
                diverged = true;
                break;
            }
            if (update < tol.semilinear_update_tol * std::max(u.sup_norm(), 1e-300)) {
                out.residual = semilinear_residual(p, u);
                const double scale_f = (m_sup + p.lambda) * std::max(u.sup_norm(), 1e-300);
                if (out.residual < tol.semilinear_residual_tol * scale_f) {
                    out.converged = true;
                    break;
                }
                if (update == 0.0) break;  // machine fixed point reached
            }
        }
        if (!diverged) break;
        shift *= 2.0;
        out.shift_escalations = escalation + 1;
        u = out.sub;
    }

    out.iterations = total_iters;
    out.u = std::move(u);
    out.residual = semilinear_residual(p, out.u);
    const double scale_f = (m_sup + p.lambda) * std::max(out.u.sup_norm(), 1e-300);
    if (out.residual < tol.semilinear_residual_tol * scale_f) out.converged = true;
    return out;
}

}  // namespace smplab
