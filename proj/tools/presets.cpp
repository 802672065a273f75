#include "presets.hpp"

#include <cmath>

namespace smplab::cli {

namespace {

void add_piece(config::Node& forcing, double lo, double hi, double value) {
    auto& p = forcing.add_child("piece");
    p.set_double("lo", lo);
    p.set_double("hi", hi);
    p.set_double("value", value);
}

config::Node band_problem(double a, bool reversed) {
    config::Node root;
    auto& problem = root.add_child("problem");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", -a);
    domain.set_double("hi", a);
    auto& forcing = problem.add_child("forcing");
    const double inner = reversed ? -1.0 : 1.0;
    if (a > 1.0) {
        add_piece(forcing, -a, -1.0, -inner);
        add_piece(forcing, -1.0, 1.0, inner);
        add_piece(forcing, 1.0, a, -inner);
    } else {
        add_piece(forcing, -a, a, inner);
    }
    return root;
}

config::Node deadcore_problem(double b) {
    config::Node root;
    auto& problem = root.add_child("problem");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", -(1.0 + b));
    domain.set_double("hi", 1.0 + b);
    auto& forcing = problem.add_child("forcing");
    auto& left = forcing.add_child("piece");
    left.set_double("lo", -(1.0 + b));
    left.set_double("hi", -b);
    left.set("coeffs", config::format_double(-3.0 * b - 1.0) + " -3");
    add_piece(forcing, -b, b, 0.0);
    auto& right = forcing.add_child("piece");
    right.set_double("lo", b);
    right.set_double("hi", 1.0 + b);
    right.set("coeffs", config::format_double(-3.0 * b - 1.0) + " 3");
    return root;
}

config::Node deadband_problem(double b) {
    const double a = 2.0 + std::sqrt(2.0);
    config::Node root;
    auto& problem = root.add_child("problem");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", -(a + b));
    domain.set_double("hi", a + b);
    auto& forcing = problem.add_child("forcing");
    add_piece(forcing, -(a + b), -(1.0 + b), 1.0);
    add_piece(forcing, -(1.0 + b), -b, -1.0);
    add_piece(forcing, -b, b, 0.0);
    add_piece(forcing, b, 1.0 + b, -1.0);
    add_piece(forcing, 1.0 + b, a + b, 1.0);
    return root;
}

config::Node cubic_problem(double a) {
    config::Node root;
    auto& problem = root.add_child("problem");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", 0.0);
    domain.set_double("hi", 1.0);
    auto& forcing = problem.add_child("forcing");
    auto& p = forcing.add_child("piece");
    p.set_double("lo", 0.0);
    p.set_double("hi", 1.0);
    p.set("coeffs", "-1 " + config::format_double(a));
    return root;
}

config::Node powerlaw_problem(double F, double C, double beta, double r0, double R) {
    config::Node root;
    auto& problem = root.add_child("problem");
    problem.set("mode", "radial");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", 0.0);
    domain.set_double("hi", R);
    auto& forcing = problem.add_child("forcing");
    add_piece(forcing, 0.0, r0, F);
    auto& tail = forcing.add_child("piece");
    tail.set_double("lo", r0);
    tail.set_double("hi", R);
    tail.set_double("strength", C);
    tail.set_double("beta", beta);
    tail.set_double("pole", R);
    return root;
}

config::Node certify_disk() {
    config::Node root;
    auto& problem = root.add_child("problem");
    problem.set("mode", "radial");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", 0.0);
    domain.set_double("hi", 1.0);
    auto& forcing = problem.add_child("forcing");
    add_piece(forcing, 0.0, 0.75, 4.0);
    add_piece(forcing, 0.75, 1.0, -0.05);
    auto& mesh = root.add_child("mesh");
    mesh.set("kind", "disk");
    mesh.set_int("n", 128);
    mesh.set_double("r", 1.0);
    mesh.set_int("dim", 2);
    auto& compact = root.add_child("compact");
    compact.set_double("r_k", 0.62);
    root.set_double("rho", 0.1);
    return root;
}

config::Node certify_interval() {
    config::Node root;
    auto& problem = root.add_child("problem");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", -2.0);
    domain.set_double("hi", 2.0);
    auto& forcing = problem.add_child("forcing");
    add_piece(forcing, -2.0, -1.5, -0.3);
    add_piece(forcing, -1.5, 1.5, 1.0);
    add_piece(forcing, 1.5, 2.0, -0.3);
    auto& mesh = root.add_child("mesh");
    mesh.set("kind", "interval");
    mesh.set_int("n", 512);
    mesh.set_double("lo", -2.0);
    mesh.set_double("hi", 2.0);
    auto& compact = root.add_child("compact");
    compact.set_double("r_k", 1.2);
    root.set_double("rho", 0.2);
    return root;
}

config::Node flat_disk() {
    config::Node root;
    auto& problem = root.add_child("problem");
    problem.set("mode", "radial");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", 0.0);
    domain.set_double("hi", 1.0);
    auto& forcing = problem.add_child("forcing");
    add_piece(forcing, 0.0, 0.5, 3.0);
    add_piece(forcing, 0.5, 1.0, -1.0);
    auto& mesh = root.add_child("mesh");
    mesh.set("kind", "disk");
    mesh.set_int("n", 128);
    mesh.set_double("r", 1.0);
    mesh.set_int("dim", 2);
    auto& compact = root.add_child("compact");
    compact.set_double("r_k", 0.35);
    root.set_double("rho", 0.06);
    return root;
}

config::Node semilinear_flat() {
    config::Node root = band_problem(2.0, false);
    // scale the band into (-1,1)
    config::Node scaled;
    auto& problem = scaled.add_child("problem");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", -1.0);
    domain.set_double("hi", 1.0);
    auto& forcing = problem.add_child("forcing");
    add_piece(forcing, -1.0, -0.5, -1.0);
    add_piece(forcing, -0.5, 0.5, 1.0);
    add_piece(forcing, 0.5, 1.0, -1.0);
    auto& mesh = scaled.add_child("mesh");
    mesh.set("kind", "interval");
    mesh.set_int("n", 256);
    mesh.set_double("lo", -1.0);
    mesh.set_double("hi", 1.0);
    auto& semi = scaled.add_child("semilinear");
    semi.set_double("lambda", 0.0);
    semi.set_double("alpha", 0.5);
    return scaled;
}

config::Node parabolic_preset(const std::string& u0) {
    config::Node root;
    auto& problem = root.add_child("problem");
    auto& domain = problem.add_child("domain");
    domain.set_double("lo", -1.0);
    domain.set_double("hi", 1.0);
    auto& forcing = problem.add_child("forcing");
    add_piece(forcing, -1.0, -0.5, -1.0);
    add_piece(forcing, -0.5, 0.5, 1.0);
    add_piece(forcing, 0.5, 1.0, -1.0);
    auto& mesh = root.add_child("mesh");
    mesh.set("kind", "interval");
    mesh.set_int("n", 512);
    mesh.set_double("lo", -1.0);
    mesh.set_double("hi", 1.0);
    auto& para = root.add_child("parabolic");
    para.set_double("dt", 1e-4);
    para.set_double("theta", 0.5);
    para.set_double("horizon", 3.0);
    para.set("u0", u0);
    return root;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {
        "example1-a1",   "example1-a1.8",  "example1-a2",    "example1-a2.2",
        "reversed-a4",   "reversed-a3.4142", "deadband-b0.5",
        "deadcore-b0.25", "deadcore-b0.5",
        "cubic-a1",      "cubic-a2",       "cubic-a3",       "cubic-a4",
        "powerlaw-holds", "powerlaw-fails",
        "certify-disk",  "certify-interval", "flat-disk",
        "semilinear-flat", "parabolic-phi2", "parabolic-phi1",
    };
}

config::Node preset_config(const std::string& name) {
    if (name == "example1-a1") return band_problem(1.0, false);
    if (name == "example1-a1.8") return band_problem(1.8, false);
    if (name == "example1-a2") return band_problem(2.0, false);
    if (name == "example1-a2.2") return band_problem(2.2, false);
    if (name == "reversed-a4") return band_problem(4.0, true);
    if (name == "reversed-a3.4142") return band_problem(3.4142, true);
    if (name == "deadband-b0.5") return deadband_problem(0.5);
    if (name == "deadcore-b0.25") return deadcore_problem(0.25);
    if (name == "deadcore-b0.5") return deadcore_problem(0.5);
    if (name == "cubic-a1") return cubic_problem(1.0);
    if (name == "cubic-a2") return cubic_problem(2.0);
    if (name == "cubic-a3") return cubic_problem(3.0);
    if (name == "cubic-a4") return cubic_problem(4.0);
    if (name == "powerlaw-holds") return powerlaw_problem(1.0, 0.01, 0.5, 0.5, 1.0);
    if (name == "powerlaw-fails") return powerlaw_problem(10.0, 0.1, 1.5, 0.9, 1.0);
    if (name == "certify-disk") return certify_disk();
    if (name == "certify-interval") return certify_interval();
    if (name == "flat-disk") return flat_disk();
    if (name == "semilinear-flat") return semilinear_flat();
    if (name == "parabolic-phi2") return parabolic_preset("phi2");
    if (name == "parabolic-phi1") return parabolic_preset("phi1");
    throw config::ConfigError("unknown preset: " + name);
}

}  // namespace smplab::cli
