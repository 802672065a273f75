#pragma once

#include <map>
#include <string>

namespace smplab {

/// Central numeric thresholds. Condition inequalities are resolved with a
/// relative margin band: |margin| below `condition_rel` times the comparison
/// scale yields Verdict::Marginal. Classification bands scale with the size
/// of the solution so verdicts are invariant under rescaling of the forcing.
struct Tolerances {
    double condition_rel = 1e-9;    // inequality margin band (relative)
    double flat_rel = 1e-8;         // |u| <= flat_rel * scale(u) counts as zero
    double slope_rel = 1e-6;        // |u'| <= slope_rel * scale(u) / L counts as flat
    double core_edge_rel = 1e-12;   // dead-core edge refinement band
    double bisection_tol = 1e-6;    // parameter bisection width
    double cg_rel_residual = 1e-12;
    double eigen_tol = 1e-12;       // stop on |lambda change|
    int eigen_max_iter = 500;
    int decay_probes = 512;
    double eigen_residual_rel = 1e-8;   // required sup|A phi - lambda phi| / lambda
    double subsolution_slack = 2.0;     // x h^2 consistency slack in -Dh w <= f + tau
    double sandwich_coeff = 50.0;       // certificate floor: u >= w - coeff*h^2*scale
    double extension_coeff = 4.0;       // zero-extension agreement: coeff*(1+|f|)*R^2*h^2
    double semilinear_update_tol = 1e-11;
    double semilinear_residual_tol = 1e-10;
    int semilinear_max_iter = 400000;

    /// Override a threshold by name ("rel", "flat", "slope", ...). Returns
    /// false for unknown names.
    bool set_named(const std::string& name, double value);

    /// Name -> value view of every threshold, for report headers.
    std::map<std::string, double> named() const;
};

inline bool Tolerances::set_named(const std::string& name, double value) {
    if (name == "rel") { condition_rel = value; return true; }
    if (name == "flat") { flat_rel = value; return true; }
    if (name == "slope") { slope_rel = value; return true; }
    if (name == "core-edge") { core_edge_rel = value; return true; }
    if (name == "bisection") { bisection_tol = value; return true; }
    if (name == "cg-residual") { cg_rel_residual = value; return true; }
    if (name == "eigen") { eigen_tol = value; return true; }
    if (name == "eigen-max-iter") { eigen_max_iter = static_cast<int>(value); return true; }
    if (name == "decay-probes") { decay_probes = static_cast<int>(value); return true; }
    if (name == "eigen-residual") { eigen_residual_rel = value; return true; }
    if (name == "subsolution-slack") { subsolution_slack = value; return true; }
    if (name == "sandwich") { sandwich_coeff = value; return true; }
    if (name == "extension") { extension_coeff = value; return true; }
    if (name == "semi-update") { semilinear_update_tol = value; return true; }
    if (name == "semi-residual") { semilinear_residual_tol = value; return true; }
    if (name == "semi-max-iter") { semilinear_max_iter = static_cast<int>(value); return true; }
    return false;
}

inline std::map<std::string, double> Tolerances::named() const {
    return {
        {"rel", condition_rel},
        {"flat", flat_rel},
        {"slope", slope_rel},
        {"core-edge", core_edge_rel},
        {"bisection", bisection_tol},
        {"cg-residual", cg_rel_residual},
        {"eigen", eigen_tol},
        {"eigen-max-iter", static_cast<double>(eigen_max_iter)},
        {"decay-probes", static_cast<double>(decay_probes)},
        {"eigen-residual", eigen_residual_rel},
        {"subsolution-slack", subsolution_slack},
        {"sandwich", sandwich_coeff},
        {"extension", extension_coeff},
        {"semi-update", semilinear_update_tol},
        {"semi-residual", semilinear_residual_tol},
        {"semi-max-iter", static_cast<double>(semilinear_max_iter)},
    };
}

}  // namespace smplab
