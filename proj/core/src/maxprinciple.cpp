#include "smplab/maxprinciple.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smplab {

namespace {

constexpr double kTiny = 1e-300;

std::vector<int> neighbor_nodes(const Mesh& m, int node) {
    std::vector<int> out;
    if (m.kind() == Mesh::Kind::Rectangle) {
        const int i = node % (m.nx() + 1), j = node / (m.nx() + 1);
        if (i > 0) out.push_back(m.index(i - 1, j));
        if (i < m.nx()) out.push_back(m.index(i + 1, j));
        if (j > 0) out.push_back(m.index(i, j - 1));
        if (j < m.ny()) out.push_back(m.index(i, j + 1));
    } else {
        if (node > 0) out.push_back(node - 1);
        if (node < m.nx()) out.push_back(node + 1);
    }
    return out;
}

void finalize_compact(const MeshPtr& mesh, CompactSet& K) {
    const Mesh& m = *mesh;
    bool any = false;
    double min_delta = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m.node_count(); ++i) {
        if (!K.contains(i)) continue;
        any = true;
        min_delta = std::min(min_delta, m.distance(i));
    }
    if (!any) throw std::invalid_argument("compact set contains no mesh nodes");
    if (!(min_delta > 2.0 * m.spacing()))
        throw std::invalid_argument("compact set must stay 2h away from the boundary");
    for (int i = 0; i < m.node_count(); ++i) {
        if (!K.contains(i)) continue;
        for (int nb : neighbor_nodes(m, i)) {
            if (!K.contains(nb)) {
                K.boundary_nodes.push_back(i);
                break;
            }
        }
    }
}

ScalarField indicator_field(const MeshPtr& mesh, int y_node, double rho, double* mass_out) {
    const Mesh& m = *mesh;
    const double h = m.spacing();
    if (!(rho > 2.0 * h)) throw BallNotInterior("ball radius must exceed 2h");
    ScalarField chi(mesh);

    if (m.kind() == Mesh::Kind::Interval) {
        const double y = m.coord_x(y_node);
        if (y - rho < m.lo_x() + 0.5 * h || y + rho > m.hi_x() - 0.5 * h)
            throw BallNotInterior("ball reaches the domain boundary");
        for (int i = 0; i < m.node_count(); ++i) {
            if (m.is_boundary(i)) continue;
            const double a = std::max(m.coord_x(i) - 0.5 * h, y - rho);
            const double b = std::min(m.coord_x(i) + 0.5 * h, y + rho);
            if (b > a) chi[i] = (b - a) / h;
        }
    } else if (m.kind() == Mesh::Kind::RadialDisk) {
        // radially symmetric analogue: the annulus |r - r_y| < rho
        const double ry = m.coord_x(y_node);
        if (ry + rho > m.radius() - 0.5 * h)
            throw BallNotInterior("annulus reaches the domain boundary");
        const double lo = std::max(ry - rho, 0.0), hi = ry + rho;
        const int N = m.dim_n();
        for (int i = 0; i < m.node_count(); ++i) {
            if (m.is_boundary(i)) continue;
            const double r = m.coord_x(i);
            const double a = std::max(std::max(r - 0.5 * h, 0.0), lo);
            const double b = std::min(r + 0.5 * h, hi);
            if (b > a) {
                const double part = (std::pow(b, N) - std::pow(a, N)) / N;
                chi[i] = part / m.volume_weight(i);
            }
        }
    } else {
        const double yx = m.coord_x(y_node), yy = m.coord_y(y_node);
        const double hy = m.spacing_y();
        if (yx - rho < 0.5 * h || yx + rho > m.hi_x() - 0.5 * h || yy - rho < 0.5 * hy ||
            yy + rho > m.hi_y() - 0.5 * hy)
            throw BallNotInterior("ball reaches the domain boundary");
        // cell fraction by subsampling
        // TODO: exact circle-cell overlap; only matters when rho is within a
        // few h of the resolution limit
        const int S = 8;
        for (int i = 0; i < m.node_count(); ++i) {
            if (m.is_boundary(i)) continue;
            const double cx = m.coord_x(i), cy = m.coord_y(i);
            if (std::hypot(cx - yx, cy - yy) > rho + std::hypot(h, hy)) continue;
            int inside = 0;
            for (int a = 0; a < S; ++a) {
                for (int b = 0; b < S; ++b) {
                    const double px = cx + h * ((a + 0.5) / S - 0.5);
                    const double py = cy + hy * ((b + 0.5) / S - 0.5);
                    if (std::hypot(px - yx, py - yy) <= rho) ++inside;
                }
            }
            chi[i] = static_cast<double>(inside) / (S * S);
        }
    }

    double mass = 0.0;
    for (int i = 0; i < chi.size(); ++i) mass += m.volume_weight(i) * chi[i];
    if (!(mass > 0.0)) throw BallNotInterior("indicator has no mass on the mesh");
    if (mass_out) *mass_out = mass;
    return chi;
}

bool ratio_node_admissible(const Mesh& m, int node) {
    if (m.is_boundary(node)) return false;
    if (m.kind() == Mesh::Kind::Rectangle) return m.distance(node) >= 2.0 * m.spacing() - 1e-12;
    return true;
}

}  // namespace

CompactSet CompactSet::radial_ball(const MeshPtr& mesh, double r_k) {
    const Mesh& m = *mesh;
    if (m.kind() == Mesh::Kind::Rectangle)
        throw std::invalid_argument("radial_ball applies to interval/radial meshes");
    CompactSet K;
    K.shape = Shape::RadialBall;
    K.r_k = r_k;
    K.mask.assign(static_cast<std::size_t>(m.node_count()), 0);
    const double mid =
        m.kind() == Mesh::Kind::Interval ? 0.5 * (m.lo_x() + m.hi_x()) : 0.0;
    for (int i = 0; i < m.node_count(); ++i) {
        if (std::abs(m.coord_x(i) - mid) <= r_k + 1e-12 * std::max(1.0, r_k))
            K.mask[static_cast<std::size_t>(i)] = 1;
    }
    finalize_compact(mesh, K);
    return K;
}

CompactSet CompactSet::sub_rectangle(const MeshPtr& mesh, double x_lo, double x_hi, double y_lo,
                                     double y_hi) {
    const Mesh& m = *mesh;
    if (m.kind() != Mesh::Kind::Rectangle)
        throw std::invalid_argument("sub_rectangle applies to rectangle meshes");
    CompactSet K;
    K.shape = Shape::SubRectangle;
    K.x_lo = x_lo;
    K.x_hi = x_hi;
    K.y_lo = y_lo;
    K.y_hi = y_hi;
    K.mask.assign(static_cast<std::size_t>(m.node_count()), 0);
    for (int i = 0; i < m.node_count(); ++i) {
        const double x = m.coord_x(i), y = m.coord_y(i);
        if (x >= x_lo - 1e-12 && x <= x_hi + 1e-12 && y >= y_lo - 1e-12 && y <= y_hi + 1e-12)
            K.mask[static_cast<std::size_t>(i)] = 1;
    }
    finalize_compact(mesh, K);
    return K;
}

ScalarField nd_forcing_field(const NdForcing& f, const MeshPtr& mesh) {
    if (const auto* symbolic = std::get_if<PiecewiseForcing>(&f))
        return sample_forcing(mesh, *symbolic);
    const auto& field = std::get<ScalarField>(f);
    if (field.mesh->node_count() != mesh->node_count() || field.mesh->kind() != mesh->kind())
        throw MeshMisaligned("forcing field lives on a different mesh");
    return field;
}

ScalarField auxiliary_solution(const MeshPtr& mesh, int y_node, double rho,
                               const Tolerances& tol) {
    const ScalarField chi = indicator_field(mesh, y_node, rho, nullptr);
    ScalarField s = solve_dirichlet(chi, tol);
    const double floor = -1e-13 * s.sup_norm();
    for (int i = 0; i < s.size(); ++i) {
        if (s[i] < floor) throw DegenerateRatio("auxiliary solution lost positivity");
    }
    return s;
}

std::pair<double, double> uniform_constants(const MeshPtr& mesh, const CompactSet& K, double rho,
                                            int samples, const Tolerances& tol) {
    const auto& bn = K.boundary_nodes;
    if (bn.empty()) throw std::invalid_argument("compact set has no boundary nodes");
    std::vector<int> chosen;
    if (samples >= static_cast<int>(bn.size())) {
        chosen = bn;
    } else {
        for (int k = 0; k < samples; ++k)
            chosen.push_back(bn[static_cast<std::size_t>(k) * bn.size() / samples]);
    }

    const ScalarField delta = distance_field(mesh);
    double c_star = std::numeric_limits<double>::infinity();
    double C_star = 0.0;
    for (int y : chosen) {
        const ScalarField s = auxiliary_solution(mesh, y, rho, tol);
        for (int i = 0; i < s.size(); ++i) {
            if (!ratio_node_admissible(*mesh, i)) continue;
            const double ratio = s[i] / delta[i];
            if (!(ratio > 0.0)) throw DegenerateRatio("auxiliary/distance ratio not positive");
            c_star = std::min(c_star, ratio);
            C_star = std::max(C_star, ratio);
        }
    }
    return {c_star, C_star};
}

namespace {

/// int f_pm * delta with the mesh's volume measure; closed form for symbolic
/// profiles, weighted node sums for fields.
std::pair<double, double> delta_weighted_parts(const NdForcing& f, const MeshPtr& mesh) {
    if (const auto* symbolic = std::get_if<PiecewiseForcing>(&f)) {
        const auto fp = symbolic->positive_part();
        const auto fm = symbolic->negative_part();
        if (mesh->kind() == Mesh::Kind::Interval) {
            return {weighted_integral(fp, WeightKind::DistanceToBoundary, fp.lo(), fp.hi()),
                    weighted_integral(fm, WeightKind::DistanceToBoundary, fm.lo(), fm.hi())};
        }
        // radial: weight (R - r) r^{N-1}
        const int N = mesh->dim_n();
        const double R = mesh->radius();
        std::vector<double> w(static_cast<std::size_t>(N) + 1, 0.0);
        w[static_cast<std::size_t>(N - 1)] = R;
        w[static_cast<std::size_t>(N)] = -1.0;
        return {integrate_against_poly(fp, w, fp.lo(), fp.hi()),
                integrate_against_poly(fm, w, fm.lo(), fm.hi())};
    }
    const auto& field = std::get<ScalarField>(f);
    double ip = 0.0, im = 0.0;
    for (int i = 0; i < field.size(); ++i) {
        const double wd = field.mesh->volume_weight(i) * field.mesh->distance(i);
        ip += wd * std::max(field[i], 0.0);
        im += wd * std::max(-field[i], 0.0);
    }
    return {ip, im};
}

}  // namespace

void check_h1(const NdForcing& f, const MeshPtr& mesh, const CompactSet& K, double rho,
              HypothesisReport& report, const Tolerances& tol) {
    const Mesh& m = *mesh;
    const ScalarField fh = nd_forcing_field(f, mesh);
    const double fsup = fh.sup_norm();

    // sign structure: f >= 0 on K and on every sampled ball, f not identically
    // zero on K
    double max_on_k = 0.0;
    for (int i = 0; i < m.node_count(); ++i) {
        if (K.contains(i)) {
            if (fh[i] < -1e-12 * fsup)
                throw SignStructureViolation("f takes negative values on the compact set");
            max_on_k = std::max(max_on_k, fh[i]);
        }
    }
    if (!(max_on_k > 0.0)) throw SignStructureViolation("f vanishes on the compact set");
    for (int y : K.boundary_nodes) {
        for (int i = 0; i < m.node_count(); ++i) {
            double dist;
            if (m.kind() == Mesh::Kind::Rectangle) {
                dist = std::hypot(m.coord_x(i) - m.coord_x(y), m.coord_y(i) - m.coord_y(y));
            } else if (m.kind() == Mesh::Kind::RadialDisk) {
                dist = std::abs(m.coord_x(i) - m.coord_x(y));
            } else {
                dist = std::abs(m.coord_x(i) - m.coord_x(y));
            }
            if (dist <= rho && fh[i] < -1e-12 * fsup)
                throw SignStructureViolation("a sampled ball leaves the nonnegative region of f");
        }
    }

    const int samples = (m.kind() == Mesh::Kind::Interval) ? 16 : 16;
    auto [c_star, C_star] = uniform_constants(mesh, K, rho, samples, tol);
    report.c_star = c_star;
    report.C_star = C_star;

    double ball_mass = 0.0;
    indicator_field(mesh, K.boundary_nodes.front(), rho, &ball_mass);
    report.c_hat = 1.0 / ball_mass;

    auto [ip, im] = delta_weighted_parts(f, mesh);
    report.int_fplus_delta = ip;
    report.int_fminus_delta = im;

    const double lhs = ip;
    const double rhs = (C_star / c_star) * im;
    const double margin = lhs - rhs;
    const double band = tol.condition_rel * std::max(std::max(lhs, rhs), kTiny);
    report.h1 = margin > band ? Verdict::Holds : (margin < -band ? Verdict::Fails : Verdict::Marginal);
    report.C_plus = report.c_hat * (c_star * ip - C_star * im);
    report.witnesses.push_back({"h1", 0.0, margin});
}

void check_h2(const NdForcing& f, const MeshPtr& mesh, const CompactSet& K, double alpha,
              const EigenPair& eig1, HypothesisReport& report, const Tolerances& tol) {
    if (!(report.c_hat > 0.0))
        throw PrerequisiteFailed("check_h2 needs the C+ bound from check_h1");
    if (!(alpha > 1.0)) throw std::invalid_argument("h2 requires alpha > 1");
    const Mesh& m = *mesh;
    const ScalarField fh = nd_forcing_field(f, mesh);
    const ScalarField grad = gradient_magnitude(eig1.field);
    const double lambda1 = eig1.value;

    report.alpha = alpha;
    double eps = std::numeric_limits<double>::infinity();
    int eps_argmin = -1;
    for (int i = 0; i < m.node_count(); ++i) {
        const bool outside = !K.contains(i);
        const bool on_dk =
            std::find(K.boundary_nodes.begin(), K.boundary_nodes.end(), i) != K.boundary_nodes.end();
        if (!outside && !on_dk) continue;
        const double phi = eig1.field[i];
        const double val = (alpha - 1.0) * grad[i] * grad[i] - lambda1 * phi * phi;
        if (val < eps) {
            eps = val;
            eps_argmin = i;
        }
    }
    report.epsilon = eps;
    if (!(eps > 0.0)) {
        report.h2 = Verdict::Fails;
        report.witnesses.push_back({"h2 gradient condition", m.coord_x(eps_argmin), eps});
        return;
    }

    double max_phi_alpha = 0.0;
    for (int i : K.boundary_nodes)
        max_phi_alpha = std::max(max_phi_alpha, std::pow(eig1.field[i], alpha));
    report.M = alpha * report.C_plus * eps / max_phi_alpha;
    report.k = report.C_plus / max_phi_alpha;

    // decay bound f >= -M phi^{alpha-2} outside K
    double worst = std::numeric_limits<double>::infinity();
    int worst_node = -1;
    for (int i = 0; i < m.node_count(); ++i) {
        if (K.contains(i)) continue;
        const double phi = eig1.field[i];
        double bound;
        if (phi <= 0.0) {
            bound = (alpha == 2.0) ? -report.M
                                   : (alpha < 2.0 ? -std::numeric_limits<double>::infinity() : 0.0);
        } else {
            bound = -report.M * std::pow(phi, alpha - 2.0);
        }
        const double margin = fh[i] - bound;
        if (margin < worst) {
            worst = margin;
            worst_node = i;
        }
    }
    const double scale = std::max(fh.sup_norm() + std::abs(report.M), kTiny);
    const double band = tol.condition_rel * scale;
    report.h2 = worst > band ? Verdict::Holds : (worst < -band ? Verdict::Fails : Verdict::Marginal);
    report.witnesses.push_back(
        {"h2 decay bound", worst_node >= 0 ? m.coord_x(worst_node) : 0.0, worst});
}

ScalarField build_subsolution(const NdForcing& f, const MeshPtr& mesh, const CompactSet& K,
                              const EigenPair& eig1, const HypothesisReport& report,
                              const Tolerances& tol) {
    if (report.h1 != Verdict::Holds || report.h2 != Verdict::Holds)
        throw PrerequisiteFailed("subsolution requires both hypotheses to hold");
    const Mesh& m = *mesh;
    const ScalarField fh = nd_forcing_field(f, mesh);

    ScalarField w(mesh);
    for (int i = 0; i < w.size(); ++i)
        w[i] = report.k * std::pow(std::max(eig1.field[i], 0.0), report.alpha);

    // boundary-of-K cap (equality at the arg max by construction of k)
    for (int i : K.boundary_nodes) {
        if (w[i] > report.C_plus * (1.0 + 1e-12) + kTiny)
            throw SubsolutionCheckFailed("w exceeds C+ on the compact boundary");
    }

    const ScalarField aw = laplacian_apply(w);
    const double h = m.spacing();
    const double tau = tol.subsolution_slack * h * h * report.k * report.alpha * report.alpha *
                       (1.0 + eig1.value) * (1.0 + eig1.value);
    for (int i = 0; i < m.node_count(); ++i) {
        if (m.is_boundary(i) || K.contains(i)) continue;
        if (aw[i] > fh[i] + tau) {
            throw SubsolutionCheckFailed("discrete subsolution inequality failed at x = " +
                                         std::to_string(m.coord_x(i)));
        }
    }

    for (int i = 0; i < w.size(); ++i) w[i] = std::min(w[i], report.C_plus);
    w.zero_boundary();
    return w;
}

PositivityCertificate verify_positivity(const NdForcing& f, const MeshPtr& mesh,
                                        const CompactSet& K, double rho,
                                        std::optional<double> alpha, const Tolerances& tol) {
    PositivityCertificate cert;
    cert.rho = rho;
    const EigenPair eig1 = first_eigenpair(mesh, tol);
    cert.lambda1 = eig1.value;

    check_h1(f, mesh, K, rho, cert.hypotheses, tol);
    if (cert.hypotheses.h1 != Verdict::Holds) {
        cert.failure_reason = "balance hypothesis (H1) does not hold";
        cert.solution = solve_dirichlet(nd_forcing_field(f, mesh), tol);
        cert.min_interior_u = cert.solution.interior_min();
        return cert;
    }

    std::vector<double> alphas = alpha ? std::vector<double>{*alpha}
                                       : std::vector<double>{1.25, 1.5, 2.0, 3.0, 4.0, 6.0};
    for (double a : alphas) {
        HypothesisReport attempt = cert.hypotheses;
        attempt.witnesses.clear();
        check_h2(f, mesh, K, a, eig1, attempt, tol);
        attempt.witnesses.insert(attempt.witnesses.begin(), cert.hypotheses.witnesses.begin(),
                                 cert.hypotheses.witnesses.end());
        cert.hypotheses = attempt;
        if (cert.hypotheses.h2 == Verdict::Holds) break;
    }
    if (cert.hypotheses.h2 != Verdict::Holds) {
        cert.failure_reason = "decay hypothesis (H2) does not hold for the scanned exponents";
        cert.solution = solve_dirichlet(nd_forcing_field(f, mesh), tol);
        cert.min_interior_u = cert.solution.interior_min();
        return cert;
    }

    cert.minorant = build_subsolution(f, mesh, K, eig1, cert.hypotheses, tol);
    cert.solution = solve_dirichlet(nd_forcing_field(f, mesh), tol);
    cert.min_interior_u = cert.solution.interior_min();

    cert.min_u_on_dK = std::numeric_limits<double>::infinity();
    for (int i : K.boundary_nodes) cert.min_u_on_dK = std::min(cert.min_u_on_dK, cert.solution[i]);

    double violation = 0.0;
    for (int i = 0; i < mesh->node_count(); ++i) {
        if (mesh->is_boundary(i) || K.contains(i)) continue;
        violation = std::max(violation, cert.minorant[i] - cert.solution[i]);
    }
    cert.sandwich_violation = violation;
    const double scale = std::max(cert.solution.sup_norm(), cert.minorant.sup_norm());
    cert.sandwich_allowance = tol.sandwich_coeff * mesh->spacing() * mesh->spacing() * scale;

    if (!(cert.min_interior_u > 0.0))
        throw CertificateFailed("hypotheses hold but the discrete solution is not positive");
    if (violation > cert.sandwich_allowance)
        throw CertificateFailed("hypotheses hold but u >= w - C h^2 fails");
    cert.certified = true;
    return cert;
}

Verdict verify_flatness_nd(const NdForcing& f, const MeshPtr& mesh, const ScalarField& u,
                           bool positivity_established, FlatnessNdInfo* info,
                           const Tolerances& tol) {
    if (!positivity_established)
        throw PrerequisiteFailed("flatness verification requires established positivity");
    const Mesh& m = *mesh;

    double integral = 0.0, abs_integral = 0.0;
    if (const auto* symbolic = std::get_if<PiecewiseForcing>(&f)) {
        const auto fp = symbolic->positive_part();
        const auto fm = symbolic->negative_part();
        if (m.kind() == Mesh::Kind::RadialDisk && m.dim_n() > 1) {
            std::vector<double> w(static_cast<std::size_t>(m.dim_n()), 0.0);
            w[static_cast<std::size_t>(m.dim_n() - 1)] = 1.0;
            const double ip = integrate_against_poly(fp, w, fp.lo(), fp.hi());
            const double im = integrate_against_poly(fm, w, fm.lo(), fm.hi());
            integral = ip - im;
            abs_integral = ip + im;
        } else {
            const double ip = integrate(fp, fp.lo(), fp.hi());
            const double im = integrate(fm, fm.lo(), fm.hi());
            integral = ip - im;
            abs_integral = ip + im;
        }
    } else {
        const auto& field = std::get<ScalarField>(f);
        for (int i = 0; i < field.size(); ++i) {
            integral += m.volume_weight(i) * field[i];
            abs_integral += m.volume_weight(i) * std::abs(field[i]);
        }
    }

    double max_quot = 0.0;
    const double h = m.spacing();
    if (m.kind() == Mesh::Kind::RadialDisk) {
        max_quot = std::abs(u[m.nx() - 1] - u[m.nx()]) / h;
    } else if (m.kind() == Mesh::Kind::Interval) {
        max_quot = std::max(std::abs(u[1] - u[0]) / h, std::abs(u[m.nx()] - u[m.nx() - 1]) / h);
    } else {
        for (int i = 0; i < m.node_count(); ++i) {
            if (!m.is_boundary(i)) continue;
            for (int nb : neighbor_nodes(m, i)) {
                if (m.is_boundary(nb)) continue;
                const bool horizontal = std::abs(nb - i) == 1;
                const double step = horizontal ? m.spacing() : m.spacing_y();
                max_quot = std::max(max_quot, std::abs(u[nb] - u[i]) / step);
            }
        }
    }

    if (info) {
        info->integral = integral;
        info->abs_integral = abs_integral;
        info->max_boundary_quotient = max_quot;
    }
    return std::abs(integral) <= tol.condition_rel * std::max(abs_integral, kTiny) ? Verdict::Holds
                                                                                   : Verdict::Fails;
}

std::pair<ScalarField, ScalarField> extend_by_zero_nd(const NdForcing& f, const ScalarField& u,
                                                      const MeshPtr& mesh_big,
                                                      const Tolerances& tol) {
    const MeshPtr mesh = u.mesh;
    const Mesh& m = *mesh;
    const Mesh& M = *mesh_big;
    if (m.kind() != M.kind()) throw MeshMisaligned("mesh kinds differ");
    if (std::abs(m.spacing() - M.spacing()) > 1e-12 * m.spacing())
        throw MeshMisaligned("mesh spacings differ");
    if (m.kind() == Mesh::Kind::Rectangle)
        throw MeshMisaligned("zero extension supports interval and radial meshes");

    int offset = 0;
    if (m.kind() == Mesh::Kind::Interval) {
        const double shift = (m.lo_x() - M.lo_x()) / m.spacing();
        offset = static_cast<int>(std::lround(shift));
        if (std::abs(shift - offset) > 1e-9 || offset < 0 ||
            M.lo_x() > m.lo_x() + 1e-12 || M.hi_x() < m.hi_x() - 1e-12)
            throw MeshMisaligned("big mesh does not align with the small mesh nodes");
        if (offset == 0 && M.nx() == m.nx()) throw MeshMisaligned("big mesh must strictly contain the small one");
    } else {
        if (M.dim_n() != m.dim_n()) throw MeshMisaligned("radial dimensions differ");
        if (!(M.radius() > m.radius() + 0.5 * m.spacing()))
            throw MeshMisaligned("big mesh must strictly contain the small one");
        const double k = (M.radius() - m.radius()) / m.spacing();
        if (std::abs(k - std::lround(k)) > 1e-9)
            throw MeshMisaligned("radii differ by a non-integer number of cells");
    }

    // flatness prerequisite (in the mean)
    FlatnessNdInfo fi;
    const Verdict flat = verify_flatness_nd(f, mesh, u, true, &fi, tol);
    if (flat != Verdict::Holds) throw NotFlat("zero extension requires int f = 0");

    ScalarField f_big(mesh_big);
    if (const auto* symbolic = std::get_if<PiecewiseForcing>(&f)) {
        const PiecewiseForcing ext =
            symbolic->extended_by_zero(M.lo_x(), m.kind() == Mesh::Kind::Interval ? M.hi_x()
                                                                                  : M.radius());
        f_big = sample_forcing(mesh_big, ext);
    } else {
        const auto& field = std::get<ScalarField>(f);
        for (int i = 0; i < m.node_count(); ++i) {
            if (!m.is_boundary(i)) f_big[offset + i] = field[i];
        }
    }

    ScalarField u_big(mesh_big);
    for (int i = 0; i < m.node_count(); ++i) u_big[offset + i] = u[i];

    const ScalarField v = solve_dirichlet(f_big, tol);
    double worst = 0.0;
    for (int i = 0; i < M.node_count(); ++i) worst = std::max(worst, std::abs(v[i] - u_big[i]));

    const double fsup = nd_forcing_field(f, mesh).sup_norm();
    const double R = (m.kind() == Mesh::Kind::Interval) ? 0.5 * (M.hi_x() - M.lo_x()) : M.radius();
    const double allowance =
        tol.extension_coeff * (1.0 + fsup) * R * R * m.spacing() * m.spacing();
    if (worst > allowance)
        throw Error("zero-extension certification failed: padded and re-solved fields disagree");
    return {f_big, u_big};
}

}  // namespace smplab
