#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "smplab/semilinear.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace smplab;
using testutil::close_abs;
using testutil::close_rel;

namespace {

/// Flat band weight scaled into (-1,1): +1 on |x|<1/2, -1 outside.
PiecewiseForcing flat_weight() {
    return PiecewiseForcing(
        {
            {-1.0, -0.5, ConstantPiece{-1.0}},
            {-0.5, 0.5, ConstantPiece{1.0}},
            {0.5, 1.0, ConstantPiece{-1.0}},
        },
        -1.0, 1.0);
}

/// Shooting oracle for the radial two-point problem -u'' = lambda u + m u^a,
/// u'(0) = 0, u(R) = 0, integrated by RK4 with bisection on u(0).
double shooting_end_value(const std::function<double(double)>& m, double lambda, double alpha,
                          double R, double s, int steps, std::vector<double>* profile = nullptr,
                          int stash_every = 0) {
    double u = s, v = 0.0, r = 0.0;
    const double h = R / steps;
    auto acc = [&](double rr, double uu) {
        return -(lambda * uu + m(rr) * std::pow(std::max(uu, 0.0), alpha));
    };
    if (profile) profile->push_back(u);
    for (int i = 0; i < steps; ++i) {
        const double k1u = v, k1v = acc(r, u);
        const double k2u = v + 0.5 * h * k1v, k2v = acc(r + 0.5 * h, u + 0.5 * h * k1u);
        const double k3u = v + 0.5 * h * k2v, k3v = acc(r + 0.5 * h, u + 0.5 * h * k2u);
        const double k4u = v + h * k3v, k4v = acc(r + h, u + h * k3u);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        r += h;
        if (profile && stash_every > 0 && (i + 1) % stash_every == 0) profile->push_back(u);
    }
    return u;
}

}  // namespace

TEST_CASE("subsolution: classical nonnegative weight") {
    const auto mesh = Mesh::interval(128, -1.0, 1.0);
    auto m = field_from(mesh, [](double, double) { return 1.0; });
    m.zero_boundary();
    const SemilinearProblem p(mesh, m, 0.0, 0.5);
    const auto u0 = build_subsolution_semilinear(p);
    CHECK(u0.interior_min() > 0.0);
    // u0 = (U/2)^2 with U the unit-forcing parabola
    for (int i = 0; i <= 128; ++i) {
        const double x = mesh->coord_x(i);
        const double U = (1.0 - x * x) / 2.0;
        CHECK(close_abs(u0[i], U * U / 4.0, 1e-12));
    }
}

TEST_CASE("subsolution: flat weight and vanishing boundary slope at alpha = 3/4") {
    std::vector<double> quotients;
    for (int n : {64, 128, 256}) {
        const auto mesh = Mesh::interval(n, -1.0, 1.0);
        const SemilinearProblem p(mesh, sample_forcing(mesh, flat_weight()), 0.0, 0.75);
        const auto u0 = build_subsolution_semilinear(p);
        CHECK(u0.interior_min() > 0.0);
        quotients.push_back(u0[1] / mesh->spacing());
    }
    // gradient exponent on U is alpha/(1-alpha) = 3: the one-sided quotient
    // collapses fast under refinement
    CHECK(quotients[1] < quotients[0] / 8.0);
    CHECK(quotients[2] < quotients[1] / 8.0);
}

TEST_CASE("subsolution requires a positive linear solve") {
    // band weight failing the decay condition: the linear solve dips negative
    const auto mesh = Mesh::interval(128, -1.1, 1.1);
    const PiecewiseForcing bad(
        {
            {-1.1, -0.5, ConstantPiece{-1.0}},
            {-0.5, 0.5, ConstantPiece{1.0}},
            {0.5, 1.1, ConstantPiece{-1.0}},
        },
        -1.1, 1.1);
    const SemilinearProblem p(mesh, sample_forcing(mesh, bad), 0.0, 0.5);
    CHECK_THROWS_AS(build_subsolution_semilinear(p), PositivityPrerequisiteFailed);
}

TEST_CASE("supersolution: resolvent field and constant selection") {
    const auto mesh = Mesh::interval(128, -1.0, 1.0);
    auto m = field_from(mesh, [](double, double) { return 1.0; });
    m.zero_boundary();
    const SemilinearProblem p(mesh, m, 0.0, 0.5);
    double C = 0.0;
    const auto sup = build_supersolution_semilinear(p, &C);
    // lambda = 0: psi is the parabola, |psi| = 1/2, C = 1.01 (1 * 0.5^0.5)^2
    CHECK(close_rel(C, 1.01 * 0.5, 1e-9));
    for (int i = 0; i <= 128; ++i) {
        const double x = mesh->coord_x(i);
        CHECK(close_abs(sup[i], C * (1.0 - x * x) / 2.0, 1e-9));
    }

    // resolvent grows monotonically toward the first eigenvalue
    double prev = 0.0;
    for (double lambda : {0.0, 1.0, 2.0, 2.4}) {
        ScalarField one(mesh);
        for (int i = 0; i < one.size(); ++i) one[i] = mesh->is_boundary(i) ? 0.0 : 1.0;
        const double cur = solve_shifted(one, lambda).sup_norm();
        CHECK(cur > prev);
        prev = cur;
    }

    const SemilinearProblem tight(mesh, m, 2.5, 0.5);  // above lambda1 = pi^2/4
    CHECK_THROWS_AS(build_supersolution_semilinear(tight), ResolventNotPositive);
}

TEST_CASE("bracketed solve: classical weight against both oracles") {
    const auto mesh = Mesh::interval(256, -1.0, 1.0);
    auto m = field_from(mesh, [](double, double) { return 1.0; });
    m.zero_boundary();
    const SemilinearProblem p(mesh, m, 0.0, 0.5);
    const auto sol = solve_bracketed(p);
    CHECK(sol.converged);
    CHECK(sol.u.interior_min() > 0.0);
    CHECK(sol.monotone_observed);
    const double scale_f = (p.m.sup_norm() + p.lambda) * sol.u.sup_norm();
    CHECK(sol.residual < 1e-10 * scale_f);
    for (int i = 0; i < sol.u.size(); ++i) {
        CHECK(sol.u[i] >= sol.sub[i] - 1e-9);
        CHECK(sol.u[i] <= sol.sup[i] + 1e-9);
    }

    // independent damped Newton on the same discrete system
    const auto newton = testutil::semilinear_newton_oracle(p, sol.sub);
    double worst = 0.0;
    for (int i = 0; i < sol.u.size(); ++i) worst = std::max(worst, std::abs(sol.u[i] - newton[i]));
    CHECK(worst < 1e-8 * sol.u.sup_norm());
}

TEST_CASE("bracketed solve converges to the continuum solution (shooting oracle)") {
    auto mfun = [](double) { return 1.0; };
    // calibrate the shooting start by bisection on u(R) = 0
    double lo = 0.01, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (shooting_end_value(mfun, 0.0, 0.5, 1.0, mid, 20000) > 0.0 ? hi : lo) = mid;
    }
    const double s_star = 0.5 * (lo + hi);

    std::vector<double> errs;
    for (int n : {64, 128, 256}) {
        const auto mesh = Mesh::interval(n, -1.0, 1.0);
        auto m = field_from(mesh, [](double, double) { return 1.0; });
        m.zero_boundary();
        const auto sol = solve_bracketed(SemilinearProblem(mesh, m, 0.0, 0.5));
        REQUIRE(sol.converged);
        // radial symmetry: compare on r >= 0 against the RK4 profile
        std::vector<double> profile;
        const int steps = 16 * n;
        shooting_end_value(mfun, 0.0, 0.5, 1.0, s_star, steps, &profile, 16 * 2);
        double worst = 0.0;
        for (int k = 0; k < static_cast<int>(profile.size()); ++k) {
            const int node = n / 2 + k;  // r = k * (2/n) ... every other sample
            if (node > n) break;
            worst = std::max(worst, std::abs(sol.u[node] - profile[static_cast<std::size_t>(k)]));
        }
        errs.push_back(worst);
    }
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);
    const double order = 0.5 * (std::log2(errs[0] / errs[1]) + std::log2(errs[1] / errs[2]));
    CHECK(order >= 1.7);
    CHECK(order <= 2.4);
}

TEST_CASE("bracketed solve: flat weight keeps a positive solution") {
    const auto mesh = Mesh::interval(256, -1.0, 1.0);
    const SemilinearProblem p(mesh, sample_forcing(mesh, flat_weight()), 0.0, 0.5);
    const auto sol = solve_bracketed(p);
    CHECK(sol.converged);
    CHECK(sol.u.interior_min() > 0.0);
    const double scale_f = p.m.sup_norm() * sol.u.sup_norm();
    CHECK(sol.residual < 1e-10 * scale_f);

    const auto newton = testutil::semilinear_newton_oracle(p, sol.sub);
    double worst = 0.0;
    for (int i = 0; i < sol.u.size(); ++i) worst = std::max(worst, std::abs(sol.u[i] - newton[i]));
    CHECK(worst < 1e-8 * sol.u.sup_norm());
}

TEST_CASE("weight promoting the subsolution to an exact solution") {
    // discrete rendering of the exactness construction: with
    // mhat = (Lap_h u0) / u0^a the subsolution u0 built from the base weight
    // solves the mhat problem exactly, and the iteration returns it
    const int n = 256;
    const auto mesh = Mesh::interval(n, -1.0, 1.0);
    const double alpha = 0.75;
    const auto mbase = sample_forcing(mesh, flat_weight());
    const auto U = solve_dirichlet(mbase);
    REQUIRE(U.interior_min() > 0.0);
    ScalarField u0(mesh);
    for (int i = 0; i <= n; ++i)
        u0[i] = std::pow(std::max((1.0 - alpha) * U[i], 0.0), 1.0 / (1.0 - alpha));
    const auto au0 = laplacian_apply(u0);
    ScalarField mhat(mesh);
    for (int i = 1; i < n; ++i) mhat[i] = au0[i] / std::pow(u0[i], alpha);

    const SemilinearProblem p(mesh, mhat, 0.0, alpha);
    BracketOptions opts;
    opts.sub = u0;
    ScalarField cap = u0;
    for (int i = 0; i <= n; ++i) cap[i] += 0.1 * u0.sup_norm();
    opts.sup = cap;
    const auto sol = solve_bracketed(p, opts);
    CHECK(sol.converged);
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(sol.u[i] - u0[i]));
    CHECK(worst < 1e-8 * u0.sup_norm());
    // mhat stays sign-changing (negative near the boundary)
    CHECK(mhat[1] < 0.0);
    CHECK(mhat[n / 2] > 0.0);
}

TEST_CASE("problem validation") {
    const auto mesh = Mesh::interval(64, -1.0, 1.0);
    auto m = field_from(mesh, [](double, double) { return 1.0; });
    CHECK_THROWS_AS(SemilinearProblem(mesh, m, 0.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(SemilinearProblem(mesh, m, -0.1, 0.5), std::invalid_argument);
    auto neg = field_from(mesh, [](double, double) { return -1.0; });
    CHECK_THROWS_AS(SemilinearProblem(mesh, neg, 0.0, 0.5), std::invalid_argument);
}
