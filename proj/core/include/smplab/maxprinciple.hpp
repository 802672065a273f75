#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smplab/operators.hpp"
#include "smplab/solver1d.hpp"

namespace smplab {

/// Compact set strictly inside the domain (min distance to the boundary
/// larger than 2h), realized as a node mask plus its discrete boundary.
struct CompactSet {
    enum class Shape { RadialBall, SubRectangle };
    Shape shape = Shape::RadialBall;
    double r_k = 0.0;
    double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
    std::vector<char> mask;
    std::vector<int> boundary_nodes;

    /// Interval meshes: [-r_k, r_k] (around the midpoint); radial meshes:
    /// {r <= r_k}.
    static CompactSet radial_ball(const MeshPtr& mesh, double r_k);
    static CompactSet sub_rectangle(const MeshPtr& mesh, double x_lo, double x_hi, double y_lo,
                                    double y_hi);

    bool contains(int node) const { return mask[static_cast<std::size_t>(node)] != 0; }
};

/// Forcing data for the hypothesis checkers: symbolic profile (interval or
/// radial meshes) or a sampled field.
using NdForcing = std::variant<PiecewiseForcing, ScalarField>;

struct HypothesisReport {
    double c_star = 0.0;
    double C_star = 0.0;
    double c_hat = 0.0;
    double C_plus = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;
    double M = 0.0;
    double k = 0.0;
    Verdict h1 = Verdict::Fails;
    Verdict h2 = Verdict::Fails;
    double int_fplus_delta = 0.0;
    double int_fminus_delta = 0.0;
    std::vector<ConditionWitness> witnesses;
};

/// Solution of -Lap s = indicator(B_rho(y)) with cell-fraction weighting of
/// the indicator. On radial meshes the ball around a boundary node of K is
/// realized as the annulus |r - r_y| < rho (the radially symmetric analogue).
ScalarField auxiliary_solution(const MeshPtr& mesh, int y_node, double rho,
                               const Tolerances& tol = {});

/// Uniform comparability constants of the auxiliary solutions against the
/// distance field:  c_star delta <= s_y <= C_star delta  over sampled y on
/// the boundary of K. Rectangle meshes evaluate the ratio on nodes with
/// delta >= 2h (the corner nodes degrade the comparison).
std::pair<double, double> uniform_constants(const MeshPtr& mesh, const CompactSet& K, double rho,
                                            int samples, const Tolerances& tol = {});

/// Balance hypothesis: int f+ delta > (C*/c*) int f- delta, with the lower
/// bound  C_plus = c_hat (c* int f+ delta - C* int f- delta)  on the compact
/// boundary, c_hat the reciprocal discrete ball mass.
void check_h1(const NdForcing& f, const MeshPtr& mesh, const CompactSet& K, double rho,
              HypothesisReport& report, const Tolerances& tol = {});

/// Decay hypothesis: epsilon = min over closure(Omega - K) of
/// ((alpha-1)|grad phi1|^2 - lambda1 phi1^2) must be positive, and
/// f >= -M phi1^{alpha-2} outside K with M = alpha C+ eps / max_{dK} phi1^a.
void check_h2(const NdForcing& f, const MeshPtr& mesh, const CompactSet& K, double alpha,
              const EigenPair& eig1, HypothesisReport& report, const Tolerances& tol = {});

/// Subsolution w = k phi1^alpha on the ring, verified nodewise against the
/// discrete operator with an h^2 consistency slack, capped by C+ over K.
/// Returns the global minorant floor min(w, C+).
ScalarField build_subsolution(const NdForcing& f, const MeshPtr& mesh, const CompactSet& K,
                              const EigenPair& eig1, const HypothesisReport& report,
                              const Tolerances& tol = {});

struct PositivityCertificate {
    bool certified = false;
    std::string failure_reason;
    HypothesisReport hypotheses;
    double rho = 0.0;
    double lambda1 = 0.0;
    double min_interior_u = 0.0;
    double min_u_on_dK = 0.0;
    double sandwich_violation = 0.0;  // max(0, max over ring of (w - u))
    double sandwich_allowance = 0.0;  // pinned coeff * h^2 * scale
    ScalarField solution;
    ScalarField minorant;
};

/// Runs the full certificate: constants, (H1), (H2) (with an alpha scan when
/// none is given), subsolution, discrete solve, and the sandwich check
/// u >= w - C h^2. Hypothesis failures yield certified = false rather than an
/// exception; structural violations still throw.
PositivityCertificate verify_positivity(const NdForcing& f, const MeshPtr& mesh,
                                        const CompactSet& K, double rho,
                                        std::optional<double> alpha = {},
                                        const Tolerances& tol = {});

struct FlatnessNdInfo {
    double integral = 0.0;
    double abs_integral = 0.0;
    double max_boundary_quotient = 0.0;
};

/// Flatness in the mean: |int f| < tol * int |f|, plus the maximum one-sided
/// boundary difference quotient of u (O(h) for flat solutions).
/// `positivity_established` records how the caller knows u > 0 (a certificate
/// from verify_positivity, or the one-dimensional theory on intervals).
Verdict verify_flatness_nd(const NdForcing& f, const MeshPtr& mesh, const ScalarField& u,
                           bool positivity_established, FlatnessNdInfo* info = nullptr,
                           const Tolerances& tol = {});

/// Zero extension onto an aligned enclosing mesh (same spacing and kind;
/// interval meshes extend symmetrically). Certifies agreement of the padded
/// solution with the big-domain solve to extension_coeff*(1+|f|)*R^2*h^2.
std::pair<ScalarField, ScalarField> extend_by_zero_nd(const NdForcing& f, const ScalarField& u,
                                                      const MeshPtr& mesh_big,
                                                      const Tolerances& tol = {});

/// Samples the forcing variant onto the mesh.
ScalarField nd_forcing_field(const NdForcing& f, const MeshPtr& mesh);

}  // namespace smplab
