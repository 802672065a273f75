#include "smplab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace smplab {

std::shared_ptr<const Mesh> Mesh::interval(int n, double lo, double hi) {
    if (n < 16) throw std::invalid_argument("interval mesh needs n >= 16");
    if (!(lo < hi)) throw std::invalid_argument("interval mesh needs lo < hi");
    auto m = std::shared_ptr<Mesh>(new Mesh());
    m->kind_ = Kind::Interval;
    m->nx_ = n;
    m->lo_x_ = lo;
    m->hi_x_ = hi;
    m->hx_ = (hi - lo) / n;
    return m;
}

std::shared_ptr<const Mesh> Mesh::rectangle(int nx, int ny, double Lx, double Ly) {
    if (nx < 16 || ny < 16) throw std::invalid_argument("rectangle mesh needs nx, ny >= 16");
    if (!(Lx > 0.0) || !(Ly > 0.0)) throw std::invalid_argument("rectangle sides must be positive");
    auto m = std::shared_ptr<Mesh>(new Mesh());
    m->kind_ = Kind::Rectangle;
    m->nx_ = nx;
    m->ny_ = ny;
    m->hi_x_ = Lx;
    m->hi_y_ = Ly;
    m->hx_ = Lx / nx;
    m->hy_ = Ly / ny;
    return m;
}

std::shared_ptr<const Mesh> Mesh::radial_disk(int n, double R, int dim_n) {
    if (n < 16) throw std::invalid_argument("radial mesh needs n >= 16");
    if (!(R > 0.0)) throw std::invalid_argument("radius must be positive");
    if (dim_n < 1 || dim_n > 3)
        throw std::invalid_argument("radial reduction supports dimensions 1..3");
    auto m = std::shared_ptr<Mesh>(new Mesh());
    m->kind_ = Kind::RadialDisk;
    m->nx_ = n;
    m->dim_n_ = dim_n;
    m->hi_x_ = R;
    m->hx_ = R / n;
    return m;
}

int Mesh::node_count() const {
    if (kind_ == Kind::Rectangle) return (nx_ + 1) * (ny_ + 1);
    return nx_ + 1;
}

int Mesh::interior_count() const {
    switch (kind_) {
        case Kind::Interval: return nx_ - 1;
        case Kind::Rectangle: return (nx_ - 1) * (ny_ - 1);
        case Kind::RadialDisk: return nx_;  // r = 0 is an unknown
    }
    return 0;
}

bool Mesh::is_boundary(int node) const {
    switch (kind_) {
        case Kind::Interval: return node == 0 || node == nx_;
        case Kind::RadialDisk: return node == nx_;
        case Kind::Rectangle: {
            const int i = node % (nx_ + 1);
            const int j = node / (nx_ + 1);
            return i == 0 || i == nx_ || j == 0 || j == ny_;
        }
    }
    return false;
}

double Mesh::coord_x(int node) const {
    if (kind_ == Kind::Rectangle) return (node % (nx_ + 1)) * hx_;
    return lo_x_ + node * hx_;
}

double Mesh::coord_y(int node) const {
    if (kind_ == Kind::Rectangle) return (node / (nx_ + 1)) * hy_;
    return 0.0;
}

double Mesh::volume_weight(int node) const {
    switch (kind_) {
        case Kind::Interval:
            return (node == 0 || node == nx_) ? 0.5 * hx_ : hx_;
        case Kind::Rectangle: {
            const int i = node % (nx_ + 1);
            const int j = node / (nx_ + 1);
            const double wx = (i == 0 || i == nx_) ? 0.5 * hx_ : hx_;
            const double wy = (j == 0 || j == ny_) ? 0.5 * hy_ : hy_;
            return wx * wy;
        }
        case Kind::RadialDisk: {
            const double r = node * hx_;
            const double a = std::max(r - 0.5 * hx_, 0.0);
            const double b = std::min(r + 0.5 * hx_, hi_x_);
            // cell integral of r^{N-1} dr
            return (std::pow(b, dim_n_) - std::pow(a, dim_n_)) / dim_n_;
        }
    }
    return 0.0;
}

double Mesh::distance(int node) const {
    switch (kind_) {
        case Kind::Interval: return std::min(coord_x(node) - lo_x_, hi_x_ - coord_x(node));
        case Kind::RadialDisk: return hi_x_ - coord_x(node);
        case Kind::Rectangle: {
            const double x = coord_x(node), y = coord_y(node);
            return std::min(std::min(x, hi_x_ - x), std::min(y, hi_y_ - y));
        }
    }
    return 0.0;
}

void ScalarField::zero_boundary() {
    for (int i = 0; i < size(); ++i) {
        if (mesh->is_boundary(i)) values[static_cast<std::size_t>(i)] = 0.0;
    }
}

double ScalarField::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double ScalarField::interior_min() const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size(); ++i) {
        if (!mesh->is_boundary(i)) m = std::min(m, values[static_cast<std::size_t>(i)]);
    }
    return m;
}

ScalarField field_from(const MeshPtr& mesh, const std::function<double(double, double)>& fn) {
    ScalarField f(mesh);
    for (int i = 0; i < f.size(); ++i) f[i] = fn(mesh->coord_x(i), mesh->coord_y(i));
    return f;
}

ScalarField distance_field(const MeshPtr& mesh) {
    ScalarField f(mesh);
    for (int i = 0; i < f.size(); ++i) f[i] = mesh->distance(i);
    return f;
}

ScalarField sample_forcing(const MeshPtr& mesh, const PiecewiseForcing& f) {
    if (mesh->kind() == Mesh::Kind::Rectangle)
        throw std::invalid_argument("symbolic forcings sample onto interval/radial meshes only");
    const double snap = 1e-9 * std::max(1.0, f.length());
    if (std::abs(mesh->lo_x() - f.lo()) > snap || std::abs(mesh->hi_x() - f.hi()) > snap)
        throw MeshMisaligned("mesh and forcing domains differ");

    const bool radial = mesh->kind() == Mesh::Kind::RadialDisk;
    const int N = mesh->dim_n();
    const double h = mesh->spacing();
    auto cuts = f.breakpoints();
    for (const auto& p : f.pieces()) {
        if (p.is_singular()) {
            cuts.push_back(p.lo);
            cuts.push_back(p.hi);
        }
    }

    ScalarField out(mesh);
    for (int i = 0; i < out.size(); ++i) {
        if (mesh->is_boundary(i)) continue;
        const double x = mesh->coord_x(i);
        const double a = std::max(x - 0.5 * h, f.lo());
        const double b = std::min(x + 0.5 * h, f.hi());
        bool cut = false;
        for (double c : cuts) {
            if (c > a + 1e-14 && c < b - 1e-14) cut = true;
        }
        bool singular_cell = false;
        for (const auto& p : f.pieces()) {
            if (p.is_singular() && !(b <= p.lo || a >= p.hi)) singular_cell = true;
        }
        if (!cut && !singular_cell) {
            out[i] = f.value_at(x);
            continue;
        }
        if (radial && N > 1) {
            std::vector<double> w(static_cast<std::size_t>(N), 0.0);
            w[static_cast<std::size_t>(N - 1)] = 1.0;  // r^{N-1}
            const double mass = integrate_against_poly(f, w, a, b);
            const double vol = (std::pow(b, N) - std::pow(a, N)) / N;
            out[i] = mass / vol;
        } else {
            out[i] = integrate(f, a, b) / (b - a);
        }
    }
    return out;
}

double dot_volume(const ScalarField& a, const ScalarField& b) {
    double acc = 0.0;
    for (int i = 0; i < a.size(); ++i) acc += a.mesh->volume_weight(i) * a[i] * b[i];
    return acc;
}

double norm_l2(const ScalarField& a) { return std::sqrt(dot_volume(a, a)); }

double integrate_field(const ScalarField& a) {
    double acc = 0.0;
    for (int i = 0; i < a.size(); ++i) acc += a.mesh->volume_weight(i) * a[i];
    return acc;
}

}  // namespace smplab
