#include "smplab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smplab {

namespace {

// half-node flux coefficient r^{N-1} for radial meshes
double radial_beta(const Mesh& m, double r_half) {
    return std::pow(std::max(r_half, 0.0), m.dim_n() - 1);
}

void apply_operator(const Mesh& m, const std::vector<double>& u, std::vector<double>& out,
                    double shift) {
    const double h = m.spacing();
    switch (m.kind()) {
        case Mesh::Kind::Interval: {
            const int n = m.nx();
            out[0] = 0.0;
            out[static_cast<std::size_t>(n)] = 0.0;
            const double ih2 = 1.0 / (h * h);
            for (int i = 1; i < n; ++i) {
                out[static_cast<std::size_t>(i)] =
                    (2.0 * u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i - 1)] -
                     u[static_cast<std::size_t>(i + 1)]) *
                        ih2 -
                    shift * u[static_cast<std::size_t>(i)];
            }
            return;
        }
        case Mesh::Kind::RadialDisk: {
            const int n = m.nx();
            out[static_cast<std::size_t>(n)] = 0.0;
            for (int i = 0; i < n; ++i) {
                const double r = i * h;
                const double v = m.volume_weight(i);
                const double bl = (i == 0) ? 0.0 : radial_beta(m, r - 0.5 * h);
                const double br = radial_beta(m, r + 0.5 * h);
                double acc = br * (u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i + 1)]);
                if (i > 0)
                    acc += bl * (u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i - 1)]);
                out[static_cast<std::size_t>(i)] = acc / (h * v) - shift * u[static_cast<std::size_t>(i)];
            }
            return;
        }
        case Mesh::Kind::Rectangle: {
            const int nx = m.nx(), ny = m.ny();
            const double ihx2 = 1.0 / (m.spacing() * m.spacing());
            const double ihy2 = 1.0 / (m.spacing_y() * m.spacing_y());
            for (int j = 0; j <= ny; ++j) {
                for (int i = 0; i <= nx; ++i) {
                    const int id = m.index(i, j);
                    if (i == 0 || i == nx || j == 0 || j == ny) {
                        out[static_cast<std::size_t>(id)] = 0.0;
                        continue;
                    }
                    const double c = u[static_cast<std::size_t>(id)];
                    out[static_cast<std::size_t>(id)] =
                        (2.0 * c - u[static_cast<std::size_t>(m.index(i - 1, j))] -
                         u[static_cast<std::size_t>(m.index(i + 1, j))]) *
                            ihx2 +
                        (2.0 * c - u[static_cast<std::size_t>(m.index(i, j - 1))] -
                         u[static_cast<std::size_t>(m.index(i, j + 1))]) *
                            ihy2 -
                        shift * c;
                }
            }
            return;
        }
    }
}

struct Tridiag {
    std::vector<double> diag, lower, upper;  // over interior unknowns
    std::vector<int> nodes;                  // unknown -> node id
};

Tridiag assemble_tridiag(const Mesh& m, double shift) {
    Tridiag t;
    const double h = m.spacing();
    if (m.kind() == Mesh::Kind::Interval) {
        const int n = m.nx();
        const double ih2 = 1.0 / (h * h);
        t.diag.assign(static_cast<std::size_t>(n - 1), 2.0 * ih2 - shift);
        t.lower.assign(static_cast<std::size_t>(n - 1), -ih2);
        t.upper.assign(static_cast<std::size_t>(n - 1), -ih2);
        for (int i = 1; i < n; ++i) t.nodes.push_back(i);
        return t;
    }
    const int n = m.nx();  // radial: unknowns i = 0..n-1
    t.diag.resize(static_cast<std::size_t>(n));
    t.lower.resize(static_cast<std::size_t>(n));
    t.upper.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double r = i * h;
        const double v = m.volume_weight(i);
        const double bl = (i == 0) ? 0.0 : radial_beta(m, r - 0.5 * h);
        const double br = radial_beta(m, r + 0.5 * h);
        t.diag[static_cast<std::size_t>(i)] = (bl + br) / (h * v) - shift;
        t.lower[static_cast<std::size_t>(i)] = -bl / (h * v);
        t.upper[static_cast<std::size_t>(i)] = -br / (h * v);
        t.nodes.push_back(i);
    }
    return t;
}

std::vector<double> thomas_solve(const Tridiag& t, std::vector<double> rhs) {
    const std::size_t n = t.diag.size();
    std::vector<double> c(n), d(n);
    double piv = t.diag[0];
    if (!(piv > 0.0)) throw ResolventNotPositive("tridiagonal pivot not positive");
    c[0] = t.upper[0] / piv;
    d[0] = rhs[0] / piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = t.diag[i] - t.lower[i] * c[i - 1];
        if (!(piv > 0.0)) throw ResolventNotPositive("tridiagonal pivot not positive");
        c[i] = t.upper[i] / piv;
        d[i] = (rhs[i] - t.lower[i] * d[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
}

std::vector<double> cg_solve(const Mesh& m, const std::vector<double>& rhs, double shift,
                             const Tolerances& tol) {
    const std::size_t n = rhs.size();
    std::vector<double> x(n, 0.0), r(n), z(n), p(n), ap(n);
    const double diag = 2.0 / (m.spacing() * m.spacing()) +
                        2.0 / (m.spacing_y() * m.spacing_y()) - shift;
    if (!(diag > 0.0)) throw ResolventNotPositive("shifted operator lost diagonal positivity");

    auto interior_only = [&](std::vector<double>& v) {
        for (int i = 0; i < static_cast<int>(n); ++i) {
            if (m.is_boundary(i)) v[static_cast<std::size_t>(i)] = 0.0;
        }
    };

    r = rhs;
    interior_only(r);
    double rhs_norm = 0.0;
    for (double v : r) rhs_norm += v * v;
    rhs_norm = std::sqrt(rhs_norm);
    if (rhs_norm == 0.0) return x;

    for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag;
    p = z;
    double rz = 0.0;
    for (std::size_t i = 0; i < n; ++i) rz += r[i] * z[i];

    const int max_iter = 40 * (m.nx() + m.ny()) + 200;
    double best = std::numeric_limits<double>::infinity();
    int stagnant = 0;
    for (int it = 0; it < max_iter; ++it) {
        apply_operator(m, p, ap, shift);
        interior_only(ap);
        double pap = 0.0;
        for (std::size_t i = 0; i < n; ++i) pap += p[i] * ap[i];
        if (!(pap > 0.0)) throw ResolventNotPositive("operator not positive definite");
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        double rn = 0.0;
        for (double v : r) rn += v * v;
        rn = std::sqrt(rn);
        if (rn <= tol.cg_rel_residual * rhs_norm) return x;
        if (rn < best * 0.999) {
            best = rn;
            stagnant = 0;
        } else if (++stagnant > 200) {
            throw SolverDiverged("conjugate gradient stalled");
        }
        for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag;
        double rz_new = 0.0;
        for (std::size_t i = 0; i < n; ++i) rz_new += r[i] * z[i];
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    throw SolverDiverged("conjugate gradient did not reach the target residual");
}

ScalarField solve_impl(const ScalarField& f, double shift, const Tolerances& tol) {
    const Mesh& m = *f.mesh;
    ScalarField u(f.mesh);
    if (m.kind() == Mesh::Kind::Rectangle) {
        u.values = cg_solve(m, f.values, shift, tol);
        u.zero_boundary();
        return u;
    }
    const Tridiag t = assemble_tridiag(m, shift);
    std::vector<double> rhs(t.nodes.size());
    for (std::size_t k = 0; k < t.nodes.size(); ++k)
        rhs[k] = f.values[static_cast<std::size_t>(t.nodes[k])];
    const auto sol = thomas_solve(t, std::move(rhs));
    for (std::size_t k = 0; k < t.nodes.size(); ++k)
        u.values[static_cast<std::size_t>(t.nodes[k])] = sol[k];
    return u;
}

}  // namespace

ScalarField laplacian_apply(const ScalarField& field) {
    ScalarField out(field.mesh);
    apply_operator(*field.mesh, field.values, out.values, 0.0);
    return out;
}

ScalarField solve_dirichlet(const ScalarField& f, const Tolerances& tol) {
    return solve_impl(f, 0.0, tol);
}

ScalarField solve_shifted(const ScalarField& f, double shift, const Tolerances& tol) {
    return solve_impl(f, shift, tol);
}

namespace {

EigenPair eigen_iterate(const MeshPtr& mesh, const EigenPair* deflate, ScalarField seed,
                        const Tolerances& tol) {
    seed.zero_boundary();
    auto orthogonalize = [&](ScalarField& v) {
        if (!deflate) return;
        const double c = dot_volume(v, deflate->field) / dot_volume(deflate->field, deflate->field);
        for (int i = 0; i < v.size(); ++i) v[i] -= c * deflate->field[i];
    };
    orthogonalize(seed);
    double nrm = norm_l2(seed);
    if (!(nrm > 0.0)) throw NoConvergence("degenerate eigen seed");
    for (auto& v : seed.values) v /= nrm;

    double lambda = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it < tol.eigen_max_iter; ++it) {
        ScalarField y = solve_dirichlet(seed, tol);
        orthogonalize(y);
        nrm = norm_l2(y);
        if (!(nrm > 0.0)) throw NoConvergence("eigen iteration collapsed");
        for (auto& v : y.values) v /= nrm;

        const ScalarField ay = laplacian_apply(y);
        const double lambda_new = dot_volume(ay, y) / dot_volume(y, y);
        residual = 0.0;
        for (int i = 0; i < y.size(); ++i) {
            if (!mesh->is_boundary(i)) residual = std::max(residual, std::abs(ay[i] - lambda_new * y[i]));
        }
        seed = y;
        const bool lambda_settled = std::abs(lambda_new - lambda) <= tol.eigen_tol * std::abs(lambda_new);
        lambda = lambda_new;
        if (lambda_settled && residual <= tol.eigen_residual_rel * lambda) break;
    }
    if (residual > tol.eigen_residual_rel * lambda)
        throw NoConvergence("eigen residual did not reach tolerance");

    // sup-norm = 1, sign fixed by the largest entry
    double sup = 0.0;
    double signed_sup = 0.0;
    for (double v : seed.values) {
        if (std::abs(v) > sup) {
            sup = std::abs(v);
            signed_sup = v;
        }
    }
    const double s = (signed_sup < 0.0 ? -1.0 : 1.0) * sup;
    for (auto& v : seed.values) v /= s;

    EigenPair out;
    out.value = lambda;
    out.field = std::move(seed);
    const ScalarField ay = laplacian_apply(out.field);
    double r = 0.0;
    for (int i = 0; i < out.field.size(); ++i) {
        if (!mesh->is_boundary(i)) r = std::max(r, std::abs(ay[i] - lambda * out.field[i]));
    }
    out.residual = r;
    return out;
}

}  // namespace

EigenPair first_eigenpair(const MeshPtr& mesh, const Tolerances& tol) {
    return eigen_iterate(mesh, nullptr, distance_field(mesh), tol);
}

EigenPair second_eigenpair(const MeshPtr& mesh, const EigenPair& first, const Tolerances& tol) {
    if (first.residual > tol.eigen_residual_rel * first.value * 10.0)
        throw PrerequisiteFailed("first eigenpair residual too large for deflation");
    // antisymmetric-leaning seed with zero boundary trace
    const double cx = 0.5 * (mesh->lo_x() + mesh->hi_x());
    ScalarField seed = distance_field(mesh);
    for (int i = 0; i < seed.size(); ++i) {
        const double x = mesh->coord_x(i);
        seed[i] *= (x - cx) + 0.25 * (mesh->hi_x() - mesh->lo_x());
    }
    return eigen_iterate(mesh, &first, std::move(seed), tol);
}

ScalarField gradient_magnitude(const ScalarField& u) {
    const Mesh& m = *u.mesh;
    ScalarField g(u.mesh);
    const double h = m.spacing();
    switch (m.kind()) {
        case Mesh::Kind::Interval:
        case Mesh::Kind::RadialDisk: {
            const int n = m.nx();
            for (int i = 0; i <= n; ++i) {
                double d;
                if (i == 0) {
                    d = (m.kind() == Mesh::Kind::RadialDisk)
                            ? 0.0  // symmetry at r = 0
                            : (u[1] - u[0]) / h;
                } else if (i == n) {
                    d = (u[n] - u[n - 1]) / h;
                } else {
                    d = (u[i + 1] - u[i - 1]) / (2.0 * h);
                }
                g[i] = std::abs(d);
            }
            return g;
        }
        case Mesh::Kind::Rectangle: {
            const int nx = m.nx(), ny = m.ny();
            const double hy = m.spacing_y();
            for (int j = 0; j <= ny; ++j) {
                for (int i = 0; i <= nx; ++i) {
                    double gx, gy;
                    if (i == 0) {
                        gx = (u[m.index(1, j)] - u[m.index(0, j)]) / h;
                    } else if (i == nx) {
                        gx = (u[m.index(nx, j)] - u[m.index(nx - 1, j)]) / h;
                    } else {
                        gx = (u[m.index(i + 1, j)] - u[m.index(i - 1, j)]) / (2.0 * h);
                    }
                    if (j == 0) {
                        gy = (u[m.index(i, 1)] - u[m.index(i, 0)]) / hy;
                    } else if (j == ny) {
                        gy = (u[m.index(i, ny)] - u[m.index(i, ny - 1)]) / hy;
                    } else {
                        gy = (u[m.index(i, j + 1)] - u[m.index(i, j - 1)]) / (2.0 * hy);
                    }
                    g[m.index(i, j)] = std::hypot(gx, gy);
                }
            }
            return g;
        }
    }
    return g;
}

}  // namespace smplab
