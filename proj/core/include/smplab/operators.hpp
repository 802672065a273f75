#pragma once

#include "smplab/mesh.hpp"
#include "smplab/tolerances.hpp"

namespace smplab {

/// Discrete -Laplace with Dirichlet boundary: 3-point stencil on intervals,
/// 5-point on rectangles, conservative flux form of -u'' - ((N-1)/r) u' with
/// the r = 0 symmetry closure on radial meshes. Output is zero at boundary
/// nodes.
ScalarField laplacian_apply(const ScalarField& field);

/// Solves -Lap u = f (interior right-hand side) by tridiagonal elimination in
/// one dimension and diagonally preconditioned conjugate gradients on
/// rectangles (relative residual per Tolerances). Deterministic.
ScalarField solve_dirichlet(const ScalarField& f, const Tolerances& tol = {});

/// Solves (-Lap - shift) u = f; requires shift below the first eigenvalue so
/// the matrix stays positive definite (and inverse-positive).
ScalarField solve_shifted(const ScalarField& f, double shift, const Tolerances& tol = {});

struct EigenPair {
    double value = 0.0;
    ScalarField field;
    double residual = 0.0;  // sup-norm of (-Lap phi - value phi)
};

/// First Dirichlet eigenpair by inverse power iteration; field normalized to
/// sup = 1 with positive sign. On radial meshes this is the first *radial*
/// eigenvalue (the full disk spectrum restricted to radially symmetric
/// modes).
EigenPair first_eigenpair(const MeshPtr& mesh, const Tolerances& tol = {});

/// Second eigenpair, deflated against `first` in the volume inner product at
/// every iteration.
EigenPair second_eigenpair(const MeshPtr& mesh, const EigenPair& first,
                           const Tolerances& tol = {});

/// Discrete gradient magnitude |grad u|: centered differences at interior
/// nodes, one-sided at the boundary (radial meshes use |du/dr|).
ScalarField gradient_magnitude(const ScalarField& u);

}  // namespace smplab
