#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "smplab/errors.hpp"
#include "smplab/forcing.hpp"

namespace smplab {

/// Uniform finite-difference mesh. Three kinds:
///   Interval(n)       -- n cells on (lo, hi), Dirichlet at both ends
///   Rectangle(nx, ny) -- tensor grid on (0,Lx)x(0,Ly), Dirichlet all around
///   RadialDisk(n)     -- radial reduction of a ball of radius R in dimension
///                        dim_n, nodes r_i = i h, symmetry at r = 0 and
///                        Dirichlet at r = R
/// Node ordering: intervals/radial by index; rectangles row-major over
/// (nx+1)*(ny+1) points. Radial integration weights drop the constant angular
/// factor; every quotient built from them is unaffected.
class Mesh {
public:
    enum class Kind { Interval, Rectangle, RadialDisk };

    static std::shared_ptr<const Mesh> interval(int n, double lo, double hi);
    static std::shared_ptr<const Mesh> rectangle(int nx, int ny, double Lx, double Ly);
    static std::shared_ptr<const Mesh> radial_disk(int n, double R, int dim_n);

    Kind kind() const { return kind_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int dim_n() const { return dim_n_; }
    double spacing() const { return hx_; }
    double spacing_y() const { return hy_; }
    double lo_x() const { return lo_x_; }
    double hi_x() const { return hi_x_; }
    double lo_y() const { return lo_y_; }
    double hi_y() const { return hi_y_; }
    double radius() const { return hi_x_; }

    int node_count() const;
    int interior_count() const;
    bool is_boundary(int node) const;
    double coord_x(int node) const;
    double coord_y(int node) const;
    int index(int i, int j) const { return j * (nx_ + 1) + i; }

    /// Integration weight of the node's dual cell (angular constants dropped
    /// for radial meshes).
    double volume_weight(int node) const;

    /// Analytic distance to the boundary.
    double distance(int node) const;

private:
    Mesh() = default;
    Kind kind_ = Kind::Interval;
    int nx_ = 0, ny_ = 0, dim_n_ = 1;
    double lo_x_ = 0.0, hi_x_ = 0.0, lo_y_ = 0.0, hi_y_ = 0.0;
    double hx_ = 0.0, hy_ = 0.0;
};

using MeshPtr = std::shared_ptr<const Mesh>;

/// Values on mesh nodes. Dirichlet-tagged fields keep boundary entries zero.
struct ScalarField {
    MeshPtr mesh;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(MeshPtr m) : mesh(std::move(m)), values(mesh->node_count(), 0.0) {}

    double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(values.size()); }

    void zero_boundary();
    double sup_norm() const;
    double interior_min() const;
};

ScalarField field_from(const MeshPtr& mesh, const std::function<double(double, double)>& fn);

/// delta(x) = d(x, boundary), analytic per mesh kind.
ScalarField distance_field(const MeshPtr& mesh);

/// Samples a symbolic forcing onto interval/radial meshes. Cells cut by piece
/// boundaries or containing singular behaviour take the closed-form cell
/// average (volume-weighted on radial meshes), which preserves the mass that
/// the positivity conditions depend on; smooth interior cells sample at the
/// node.
ScalarField sample_forcing(const MeshPtr& mesh, const PiecewiseForcing& f);

/// Volume-weighted inner product and norms.
double dot_volume(const ScalarField& a, const ScalarField& b);
double norm_l2(const ScalarField& a);

/// Integral of the field (volume weights; radial drops angular constants).
double integrate_field(const ScalarField& a);

}  // namespace smplab
