#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "smplab/io.hpp"
#include "smplab/maxprinciple.hpp"
#include "smplab/parabolic.hpp"
#include "smplab/semilinear.hpp"
#include "smplab/solver1d.hpp"

namespace smplab::cli {

namespace {

namespace fs = std::filesystem;

// ---- schema -----------------------------------------------------------------

void require_known(const config::Node& node, const std::vector<std::string>& scalar_keys,
                   const std::vector<std::string>& child_names) {
    for (const auto& [k, v] : node.scalars) {
        if (std::find(scalar_keys.begin(), scalar_keys.end(), k) == scalar_keys.end())
            throw config::ConfigError("unknown key '" + k + "' in block '" +
                                      (node.name.empty() ? "<root>" : node.name) + "'");
    }
    for (const auto& c : node.children) {
        if (std::find(child_names.begin(), child_names.end(), c.name) == child_names.end())
            throw config::ConfigError("unknown block '" + c.name + "' in '" +
                                      (node.name.empty() ? "<root>" : node.name) + "'");
    }
}

void validate_schema(const config::Node& root) {
    require_known(root, {"command", "out_dir", "mesh_n", "rho", "alpha"},
                  {"problem", "mesh", "compact", "semilinear", "parabolic", "tol"});
    if (const auto* problem = root.child("problem")) {
        require_known(*problem, {"mode", "r0"}, {"domain", "forcing"});
        if (const auto* domain = problem->child("domain"))
            require_known(*domain, {"lo", "hi"}, {});
        if (const auto* forcing = problem->child("forcing")) {
            require_known(*forcing, {}, {"piece"});
            for (const auto* piece : forcing->children_named("piece")) {
                require_known(*piece, {"lo", "hi", "value", "coeffs", "strength", "beta", "pole"},
                              {});
            }
        }
    }
    if (const auto* mesh = root.child("mesh"))
        require_known(*mesh, {"kind", "n", "nx", "ny", "lx", "ly", "r", "dim", "lo", "hi"}, {});
    if (const auto* compact = root.child("compact"))
        require_known(*compact, {"r_k", "x_lo", "x_hi", "y_lo", "y_hi"}, {});
    if (const auto* semi = root.child("semilinear"))
        require_known(*semi, {"lambda", "alpha"}, {});
    if (const auto* para = root.child("parabolic"))
        require_known(*para, {"dt", "theta", "horizon", "u0", "snapshot_times"}, {});
}

// ---- construction from config ------------------------------------------------

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    double v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw config::ConfigError("malformed number list: '" + text + "'");
    return out;
}

PiecewiseForcing forcing_from(const config::Node& problem) {
    const auto* domain = problem.child("domain");
    const auto* forcing = problem.child("forcing");
    if (!domain || !forcing)
        throw config::ConfigError("problem block needs 'domain' and 'forcing'");
    const double lo = domain->require_double("lo");
    const double hi = domain->require_double("hi");
    std::vector<ForcingPiece> pieces;
    for (const auto* pc : forcing->children_named("piece")) {
        ForcingPiece piece;
        piece.lo = pc->require_double("lo");
        piece.hi = pc->require_double("hi");
        const bool has_value = pc->has("value");
        const bool has_coeffs = pc->has("coeffs");
        const bool has_power = pc->has("strength") || pc->has("beta") || pc->has("pole");
        if (static_cast<int>(has_value) + static_cast<int>(has_coeffs) +
                static_cast<int>(has_power) != 1)
            throw config::ConfigError(
                "piece needs exactly one of: value | coeffs | strength/beta/pole");
        if (has_value) {
            piece.kind = ConstantPiece{pc->require_double("value")};
        } else if (has_coeffs) {
            piece.kind = PolynomialPiece{parse_numbers(pc->require("coeffs"))};
        } else {
            piece.kind = PowerSingularityPiece{pc->require_double("strength"),
                                               pc->require_double("beta"),
                                               pc->require_double("pole")};
        }
        pieces.push_back(std::move(piece));
    }
    if (pieces.empty()) throw config::ConfigError("forcing block has no pieces");
    try {
        return PiecewiseForcing(std::move(pieces), lo, hi);
    } catch (const std::invalid_argument& e) {
        throw config::ConfigError(std::string("invalid forcing: ") + e.what());
    }
}

Solution1D::Mode mode_from(const config::Node& problem) {
    const std::string mode = problem.get_string("mode", "full");
    if (mode == "full") return Solution1D::Mode::FullDirichlet;
    if (mode == "radial") return Solution1D::Mode::Radial;
    throw config::ConfigError("problem mode must be 'full' or 'radial'");
}

MeshPtr mesh_from(const config::Node& root, int mesh_override) {
    const auto* m = root.child("mesh");
    if (!m) throw config::ConfigError("this command needs a 'mesh' block");
    const std::string kind = m->get_string("kind", "interval");
    const int n = mesh_override > 0 ? mesh_override : m->get_int("n", 128);
    if (kind == "interval")
        return Mesh::interval(n, m->get_double("lo", -1.0), m->get_double("hi", 1.0));
    if (kind == "disk")
        return Mesh::radial_disk(n, m->get_double("r", 1.0), m->get_int("dim", 2));
    if (kind == "rectangle") {
        const int nx = mesh_override > 0 ? mesh_override : m->get_int("nx", 48);
        const int ny = mesh_override > 0 ? mesh_override : m->get_int("ny", 48);
        return Mesh::rectangle(nx, ny, m->get_double("lx", 1.0), m->get_double("ly", 1.0));
    }
    throw config::ConfigError("mesh kind must be interval | disk | rectangle");
}

Tolerances tolerances_from(const config::Node& root, const CliOptions& opts) {
    Tolerances tol;
    if (const auto* t = root.child("tol")) {
        for (const auto& [k, v] : t->scalars) {
            char* end = nullptr;
            const double val = std::strtod(v.c_str(), &end);
            if (end == v.c_str() || *end != '\0' || !tol.set_named(k, val))
                throw config::ConfigError("unknown or malformed tolerance '" + k + "'");
        }
    }
    for (const auto& [k, v] : opts.tol_overrides) {
        if (!tol.set_named(k, v)) throw config::ConfigError("unknown tolerance '" + k + "'");
    }
    return tol;
}

// ---- report scaffolding --------------------------------------------------------

config::Node report_skeleton(const std::string& command, const config::Node& cfg,
                             const Tolerances& tol) {
    config::Node rep;
    rep.set("command", command);
    auto& resolved = rep.add_child("config");
    resolved.scalars = cfg.scalars;
    resolved.children = cfg.children;
    auto& tols = rep.add_child("tolerances");
    for (const auto& [k, v] : tol.named()) tols.set_double(k, v);
    return rep;
}

void emit_report(const fs::path& dir, const std::string& stem, const config::Node& rep) {
    io::write_file(dir / (stem + ".report"), config::serialize(rep));
    io::write_file(dir / (stem + ".json"), io::json_of_node(rep));
}

void conditions_into(config::Node& out, const ConditionReport& rep) {
    out.set("balance", to_string(rep.balance));
    out.set("decay", to_string(rep.decay));
    out.set("flatness", to_string(rep.flatness));
    out.set("weighted_positivity", to_string(rep.weighted_positivity));
    out.set_double("r0", rep.r0);
    if (rep.boundary_derivative_defined) {
        out.set_double("boundary_derivative", rep.boundary_derivative);
    } else {
        out.set("boundary_derivative", "undefined (f- not integrable)");
    }
    for (const auto& w : rep.witnesses) {
        auto& wn = out.add_child("witness");
        wn.set("condition", w.condition);
        wn.set_double("location", w.location);
        wn.set_double("margin", w.margin);
    }
}

void classification_into(config::Node& out, const Classification& cls) {
    out.set("verdict", to_string(cls.verdict));
    out.set_double("min_value", cls.min_value);
    out.set_double("min_location", cls.min_location);
    out.set_double("boundary_slope_lo", cls.boundary_slopes.first);
    out.set_double("boundary_slope_hi", cls.boundary_slopes.second);
    out.set("slopes_converged", cls.slopes_converged.first && cls.slopes_converged.second
                                    ? "true"
                                    : "false");
    for (const auto& r : cls.regions) {
        auto& rn = out.add_child("region");
        rn.set_double("lo", r.lo);
        rn.set_double("hi", r.hi);
    }
}

struct Solved1D {
    PiecewiseForcing forcing;
    Solution1D solution;
    Classification classification;
    std::optional<ConditionReport> conditions;
};

Solved1D solve_and_check(const config::Node& cfg, const Tolerances& tol, int grid_n) {
    const auto* problem = cfg.child("problem");
    if (!problem) throw config::ConfigError("missing 'problem' block");
    PiecewiseForcing f = forcing_from(*problem);
    const auto mode = mode_from(*problem);
    std::optional<double> r0;
    if (problem->has("r0")) r0 = problem->require_double("r0");

    Solved1D out{f, Solution1D(f, mode), classify(f, grid_n, mode, tol), {}};
    try {
        out.conditions = check_conditions(f, r0, tol);
    } catch (const SignStructureViolation&) {
        // multi-crossing or reversed-sign forcings are classified but not
        // condition-checked
    }
    return out;
}

io::SvgPanel solution_panel(const Solution1D& u, const std::string& title, int samples) {
    io::SvgPanel panel;
    panel.title = title;
    io::SvgSeries ser;
    ser.label = "u";
    for (int i = 0; i <= samples; ++i) {
        const double x = u.lo() + (u.hi() - u.lo()) * i / samples;
        ser.x.push_back(x);
        ser.y.push_back(u.eval(x));
    }
    panel.series.push_back(std::move(ser));
    return panel;
}

std::string solution_csv(const Solution1D& u, int samples) {
    std::vector<double> xs, us, dus;
    for (int i = 0; i <= samples; ++i) {
        const double x = u.lo() + (u.hi() - u.lo()) * i / samples;
        xs.push_back(x);
        us.push_back(u.eval(x));
        double du = std::numeric_limits<double>::quiet_NaN();
        try {
            du = u.derivative(x);
        } catch (const NonIntegrableSingularity&) {
        }
        dus.push_back(du);
    }
    return io::csv_from_columns({"x", "u", "du"}, {xs, us, dus});
}

int exit_from_conditions(const std::optional<ConditionReport>& rep) {
    if (!rep) return kExitOk;
    if (rep->balance == Verdict::Fails || rep->decay == Verdict::Fails)
        return kExitConditionFails;
    return kExitOk;
}

// ---- commands -------------------------------------------------------------------

int cmd_solve1d(const config::Node& cfg, const CliOptions& opts, const Tolerances& tol) {
    const int n = opts.mesh_override > 0 ? opts.mesh_override : cfg.get_int("mesh_n", 2048);
    const Solved1D s = solve_and_check(cfg, tol, n);

    io::write_file(opts.out_dir / "u.csv", solution_csv(s.solution, std::min(n, 4096)));
    io::write_file(opts.out_dir / "figure.svg",
                   io::svg_line_plot({solution_panel(s.solution, "solution", 512)}));

    config::Node rep = report_skeleton("solve1d", cfg, tol);
    auto& results = rep.add_child("results");
    classification_into(results.add_child("classification"), s.classification);
    if (s.conditions) {
        conditions_into(results.add_child("conditions"), *s.conditions);
    } else {
        results.set("conditions", "not applicable (no single sign change)");
    }
    emit_report(opts.out_dir, "conditions", rep);
    return exit_from_conditions(s.conditions);
}

int cmd_check(const config::Node& cfg, const CliOptions& opts, const Tolerances& tol) {
    const Solved1D s = solve_and_check(cfg, tol, cfg.get_int("mesh_n", 1024));
    config::Node rep = report_skeleton("check", cfg, tol);
    auto& results = rep.add_child("results");
    classification_into(results.add_child("classification"), s.classification);
    int code = exit_from_conditions(s.conditions);
    if (s.conditions) {
        conditions_into(results.add_child("conditions"), *s.conditions);
    } else {
        results.set("conditions", "not applicable (no single sign change)");
    }

    // optional N-d hypothesis report when a mesh and a compact set are given
    if (cfg.child("mesh") && cfg.child("compact")) {
        const MeshPtr mesh = mesh_from(cfg, opts.mesh_override);
        const auto K = CompactSet::radial_ball(mesh, cfg.child("compact")->require_double("r_k"));
        const double rho = cfg.get_double("rho", 4.0 * mesh->spacing());
        const auto eig1 = first_eigenpair(mesh, tol);
        HypothesisReport hyp;
        check_h1(NdForcing{s.forcing}, mesh, K, rho, hyp, tol);
        if (cfg.has("alpha")) {
            check_h2(NdForcing{s.forcing}, mesh, K, cfg.require_double("alpha"), eig1, hyp, tol);
        } else {
            for (double a : {1.25, 1.5, 2.0, 3.0, 4.0, 6.0}) {
                HypothesisReport attempt = hyp;
                attempt.witnesses.clear();
                check_h2(NdForcing{s.forcing}, mesh, K, a, eig1, attempt, tol);
                hyp = attempt;
                if (hyp.h2 == Verdict::Holds) break;
            }
        }
        auto& hn = results.add_child("hypotheses");
        hn.set("h1", to_string(hyp.h1));
        hn.set("h2", to_string(hyp.h2));
        hn.set_double("c_star", hyp.c_star);
        hn.set_double("C_star", hyp.C_star);
        hn.set_double("c_hat", hyp.c_hat);
        hn.set_double("C_plus", hyp.C_plus);
        hn.set_double("alpha", hyp.alpha);
        hn.set_double("epsilon", hyp.epsilon);
        hn.set_double("M", hyp.M);
        hn.set_double("k", hyp.k);
        if (hyp.h1 == Verdict::Fails || hyp.h2 == Verdict::Fails) code = kExitConditionFails;
    }
    emit_report(opts.out_dir, "check", rep);
    return code;
}

int cmd_solve_nd(const config::Node& cfg, const CliOptions& opts, const Tolerances& tol) {
    const MeshPtr mesh = mesh_from(cfg, opts.mesh_override);
    ScalarField f(mesh);
    if (const auto* problem = cfg.child("problem")) {
        if (mesh->kind() == Mesh::Kind::Rectangle) {
            const auto* forcing = problem->child("forcing");
            if (!forcing || forcing->children_named("piece").size() != 1 ||
                !forcing->children_named("piece").front()->has("value"))
                throw config::ConfigError(
                    "rectangle solves take a single constant forcing piece");
            const double v = forcing->children_named("piece").front()->require_double("value");
            for (int i = 0; i < f.size(); ++i) f[i] = mesh->is_boundary(i) ? 0.0 : v;
        } else {
            f = sample_forcing(mesh, forcing_from(*problem));
        }
    } else {
        throw config::ConfigError("missing 'problem' block");
    }
    const ScalarField u = solve_dirichlet(f, tol);
    const auto eig1 = first_eigenpair(mesh, tol);

    if (mesh->kind() == Mesh::Kind::Rectangle) {
        std::vector<double> xs, ys, us;
        for (int i = 0; i < u.size(); ++i) {
            xs.push_back(mesh->coord_x(i));
            ys.push_back(mesh->coord_y(i));
            us.push_back(u[i]);
        }
        io::write_file(opts.out_dir / "u.csv", io::csv_from_columns({"x", "y", "u"}, {xs, ys, us}));
    } else {
        std::vector<double> xs, us;
        for (int i = 0; i < u.size(); ++i) {
            xs.push_back(mesh->coord_x(i));
            us.push_back(u[i]);
        }
        io::write_file(opts.out_dir / "u.csv", io::csv_from_columns({"x", "u"}, {xs, us}));
        io::SvgPanel panel;
        panel.title = "discrete solution";
        io::SvgSeries ser;
        ser.label = "u";
        ser.x = xs;
        ser.y = us;
        panel.series.push_back(std::move(ser));
        io::write_file(opts.out_dir / "figure.svg", io::svg_line_plot({panel}));
    }

    config::Node rep = report_skeleton("solve-nd", cfg, tol);
    auto& results = rep.add_child("results");
    results.set_double("min_interior", u.interior_min());
    results.set_double("sup_norm", u.sup_norm());
    results.set_double("lambda1", eig1.value);
    emit_report(opts.out_dir, "solve-nd", rep);
    return kExitOk;
}

int cmd_certify(const config::Node& cfg, const CliOptions& opts, const Tolerances& tol) {
    const MeshPtr mesh = mesh_from(cfg, opts.mesh_override);
    const auto* problem = cfg.child("problem");
    const auto* compact = cfg.child("compact");
    if (!problem || !compact)
        throw config::ConfigError("certify needs 'problem' and 'compact' blocks");
    const PiecewiseForcing f = forcing_from(*problem);
    const auto K = CompactSet::radial_ball(mesh, compact->require_double("r_k"));
    const double rho = cfg.get_double("rho", 4.0 * mesh->spacing());
    std::optional<double> alpha;
    if (cfg.has("alpha")) alpha = cfg.require_double("alpha");

    const auto cert = verify_positivity(NdForcing{f}, mesh, K, rho, alpha, tol);

    std::vector<double> xs, us, ws;
    for (int i = 0; i < cert.solution.size(); ++i) {
        xs.push_back(mesh->coord_x(i));
        us.push_back(cert.solution[i]);
        ws.push_back(cert.minorant.size() ? cert.minorant[i] : 0.0);
    }
    io::write_file(opts.out_dir / "certificate.csv",
                   io::csv_from_columns({"x", "u", "minorant"}, {xs, us, ws}));

    config::Node rep = report_skeleton("certify", cfg, tol);
    auto& results = rep.add_child("results");
    results.set("certified", cert.certified ? "true" : "false");
    if (!cert.certified) results.set("failure_reason", cert.failure_reason);
    results.set_double("lambda1", cert.lambda1);
    results.set_double("rho", cert.rho);
    results.set_double("min_interior_u", cert.min_interior_u);
    results.set_double("min_u_on_dK", cert.min_u_on_dK);
    results.set_double("sandwich_violation", cert.sandwich_violation);
    results.set_double("sandwich_allowance", cert.sandwich_allowance);
    auto& hn = results.add_child("hypotheses");
    hn.set("h1", to_string(cert.hypotheses.h1));
    hn.set("h2", to_string(cert.hypotheses.h2));
    hn.set_double("c_star", cert.hypotheses.c_star);
    hn.set_double("C_star", cert.hypotheses.C_star);
    hn.set_double("c_hat", cert.hypotheses.c_hat);
    hn.set_double("C_plus", cert.hypotheses.C_plus);
    hn.set_double("alpha", cert.hypotheses.alpha);
    hn.set_double("epsilon", cert.hypotheses.epsilon);
    hn.set_double("M", cert.hypotheses.M);
    hn.set_double("k", cert.hypotheses.k);
    hn.set_double("int_fplus_delta", cert.hypotheses.int_fplus_delta);
    hn.set_double("int_fminus_delta", cert.hypotheses.int_fminus_delta);
    for (const auto& w : cert.hypotheses.witnesses) {
        auto& wn = hn.add_child("witness");
        wn.set("condition", w.condition);
        wn.set_double("location", w.location);
        wn.set_double("margin", w.margin);
    }
    emit_report(opts.out_dir, "certificate", rep);
    return cert.certified ? kExitOk : kExitConditionFails;
}

int cmd_semilinear(const config::Node& cfg, const CliOptions& opts, const Tolerances& tol) {
    const MeshPtr mesh = mesh_from(cfg, opts.mesh_override);
    const auto* problem = cfg.child("problem");
    const auto* semi = cfg.child("semilinear");
    if (!problem || !semi)
        throw config::ConfigError("semilinear needs 'problem' and 'semilinear' blocks");
    const double lambda = semi->get_double("lambda", 0.0);
    const double alpha = semi->get_double("alpha", 0.5);
    const ScalarField m = sample_forcing(mesh, forcing_from(*problem));

    // hypothesis gate: lambda below the discrete principal eigenvalue
    const auto eig1 = first_eigenpair(mesh, tol);
    if (!(lambda < eig1.value))
        throw config::ConfigError("semilinear lambda must stay below lambda1 = " +
                                  config::format_double(eig1.value));

    SemilinearProblem p(mesh, m, lambda, alpha);
    const auto sol = solve_bracketed(p, {}, tol);

    std::vector<double> xs, us, subs, sups;
    for (int i = 0; i < sol.u.size(); ++i) {
        xs.push_back(mesh->coord_x(i));
        us.push_back(sol.u[i]);
        subs.push_back(sol.sub[i]);
        sups.push_back(sol.sup[i]);
    }
    io::write_file(opts.out_dir / "semilinear.csv",
                   io::csv_from_columns({"x", "u", "sub", "sup"}, {xs, us, subs, sups}));

    config::Node rep = report_skeleton("semilinear", cfg, tol);
    auto& results = rep.add_child("results");
    results.set("converged", sol.converged ? "true" : "false");
    results.set_double("residual", sol.residual);
    results.set_int("iterations", sol.iterations);
    results.set_double("min_interior_u", sol.u.interior_min());
    results.set_double("lambda1", eig1.value);
    results.set("monotone_observed", sol.monotone_observed ? "true" : "false");
    results.set_int("shift_escalations", sol.shift_escalations);
    emit_report(opts.out_dir, "semilinear", rep);
    return (sol.converged && sol.u.interior_min() > 0.0) ? kExitOk : kExitConditionFails;
}

int cmd_parabolic(const config::Node& cfg, const CliOptions& opts, const Tolerances& tol) {
    const MeshPtr mesh = mesh_from(cfg, opts.mesh_override);
    const auto* problem = cfg.child("problem");
    const auto* para = cfg.child("parabolic");
    if (!problem || !para)
        throw config::ConfigError("parabolic needs 'problem' and 'parabolic' blocks");
    const ScalarField g = sample_forcing(mesh, forcing_from(*problem));

    const auto eig1 = first_eigenpair(mesh, tol);
    const std::string u0_kind = para->get_string("u0", "phi2");
    ScalarField u0(mesh);
    if (u0_kind == "phi1") {
        u0 = eig1.field;
    } else if (u0_kind == "phi2") {
        u0 = second_eigenpair(mesh, eig1, tol).field;
    } else if (u0_kind == "phi1+phi2") {
        const auto eig2 = second_eigenpair(mesh, eig1, tol);
        for (int i = 0; i < u0.size(); ++i) u0[i] = eig1.field[i] + eig2.field[i];
    } else if (u0_kind != "zero") {
        throw config::ConfigError("parabolic u0 must be phi1 | phi2 | phi1+phi2 | zero");
    }

    ParabolicProblem p(mesh, u0, g, para->get_double("dt", 1e-3),
                       para->get_double("theta", 0.5), para->get_double("horizon", 1.0));
    const auto trace = find_positivity_time(p, tol);

    io::write_file(opts.out_dir / "trace.csv",
                   io::csv_from_columns({"t", "min_u", "dist_to_stationary"},
                                        {trace.times, trace.min_interior,
                                         trace.dist_to_stationary}));
    {
        io::SvgPanel panel;
        panel.title = "interior minimum over time";
        io::SvgSeries ser;
        ser.label = "min u";
        ser.x = trace.times;
        ser.y = trace.min_interior;
        panel.series.push_back(std::move(ser));
        io::write_file(opts.out_dir / "trace.svg", io::svg_line_plot({panel}));
    }

    // snapshots at requested times
    if (para->has("snapshot_times")) {
        const auto wanted = parse_numbers(para->require("snapshot_times"));
        std::vector<std::vector<double>> cols;
        std::vector<std::string> headers{"x"};
        std::vector<double> xs;
        for (int i = 0; i < mesh->node_count(); ++i) xs.push_back(mesh->coord_x(i));
        cols.push_back(xs);
        const ThetaScheme scheme(p, tol);
        ScalarField state = p.u0;
        double t = 0.0;
        std::size_t next = 0;
        std::vector<double> sorted = wanted;
        std::sort(sorted.begin(), sorted.end());
        while (next < sorted.size() && t + 1e-12 >= sorted[next]) {
            headers.push_back("u_t" + config::format_double(sorted[next]));
            cols.push_back(state.values);
            ++next;
        }
        const int steps = static_cast<int>(std::ceil(p.horizon / p.dt - 1e-12));
        for (int s = 0; s < steps && next < sorted.size(); ++s) {
            scheme.step(state, t);
            t += p.dt;
            while (next < sorted.size() && t + 1e-12 >= sorted[next]) {
                headers.push_back("u_t" + config::format_double(sorted[next]));
                cols.push_back(state.values);
                ++next;
            }
        }
        io::write_file(opts.out_dir / "snapshots.csv", io::csv_from_columns(headers, cols));
    }

    // decay fit for phi1-orthogonal data
    config::Node rep = report_skeleton("parabolic", cfg, tol);
    auto& results = rep.add_child("results");
    if (trace.t0) {
        results.set_double("t0", *trace.t0);
    } else {
        results.set("t0", "NotReached");
    }
    results.set_double("stationary_min", trace.stationary_min);
    results.set_double("u0_phi1_inner", trace.u0_phi1_inner);
    results.set("hypothesis_warning", trace.hypothesis_warning ? "true" : "false");
    results.set_double("steady_rate", trace.decay_rate);
    const double ortho_scale = norm_l2(u0) * norm_l2(eig1.field);
    if (u0_kind != "zero" && std::abs(trace.u0_phi1_inner) <= 1e-10 * std::max(ortho_scale, 1e-300)) {
        const auto fit = verify_decay_estimate(mesh, u0, p.dt,
                                               p.theta, std::min(p.horizon, 0.8), tol);
        auto& dn = results.add_child("decay_estimate");
        dn.set_double("rate", fit.rate);
        dn.set_double("lambda2", fit.lambda2);
        dn.set_double("prefactor", fit.prefactor);
        dn.set_double("fit_residual", fit.fit_residual);
        dn.set("bound_ok", fit.bound_ok ? "true" : "false");
    }
    emit_report(opts.out_dir, "parabolic", rep);
    return trace.t0 ? kExitOk : kExitConditionFails;
}

// ---- reproduce -------------------------------------------------------------------

PiecewiseForcing band_forcing(double a, bool reversed) {
    const double inner = reversed ? -1.0 : 1.0;
    if (a <= 1.0) return PiecewiseForcing::constant(inner, -a, a);
    return PiecewiseForcing(
        {
            {-a, -1.0, ConstantPiece{-inner}},
            {-1.0, 1.0, ConstantPiece{inner}},
            {1.0, a, ConstantPiece{-inner}},
        },
        -a, a);
}

int reproduce_figure1(const CliOptions& opts, const Tolerances& tol) {
    const std::vector<double> avals{1.0, 1.8, 2.0, 2.2};
    struct Panel {
        double a;
        Classification cls;
        std::vector<double> xs, us;
        double slope_hi;
    };
    std::vector<std::future<Panel>> futures;
    for (double a : avals) {
        futures.push_back(std::async(std::launch::async, [a, &tol] {
            Panel p;
            p.a = a;
            const auto f = band_forcing(a, false);
            const Solution1D u(f, Solution1D::Mode::FullDirichlet);
            p.cls = classify(f, 2048, Solution1D::Mode::FullDirichlet, tol);
            for (int i = 0; i <= 512; ++i) {
                const double x = -a + 2.0 * a * i / 512.0;
                p.xs.push_back(x);
                p.us.push_back(u.eval(x));
            }
            p.slope_hi = u.derivative(a);
            return p;
        }));
    }
    std::vector<io::SvgPanel> panels;
    config::Node rep;
    rep.set("command", "reproduce figure1");
    auto& tols = rep.add_child("tolerances");
    for (const auto& [k, v] : tol.named()) tols.set_double(k, v);
    auto& results = rep.add_child("results");
    for (auto& fut : futures) {
        const Panel p = fut.get();
        io::SvgPanel panel;
        std::ostringstream title;
        title << "a = " << config::format_double(p.a) << "  (" << to_string(p.cls.verdict)
              << ", u'(a) = " << config::format_double(p.slope_hi) << ")";
        panel.title = title.str();
        io::SvgSeries ser;
        ser.label = "u";
        ser.x = p.xs;
        ser.y = p.us;
        panel.series.push_back(std::move(ser));
        panels.push_back(std::move(panel));
        io::write_file(opts.out_dir /
                           ("figure1_a" + config::format_double(p.a) + ".csv"),
                       io::csv_from_columns({"x", "u"}, {p.xs, p.us}));
        auto& pn = results.add_child("panel");
        pn.set_double("a", p.a);
        pn.set("classification", to_string(p.cls.verdict));
        pn.set_double("boundary_slope", p.slope_hi);
    }
    io::write_file(opts.out_dir / "figure1.svg", io::svg_line_plot(panels));
    emit_report(opts.out_dir, "figure1", rep);
    return kExitOk;
}

int reproduce_figure2(const CliOptions& opts, const Tolerances& tol) {
    // critical amplitude of the reversed family via the center value
    const double astar = find_critical_parameter(
        [](double a) { return band_forcing(a, true); },
        {SolutionFunctional::Kind::ValueAt, 0.0}, 0.0, {3.0, 4.0}, 1e-8);

    std::vector<io::SvgPanel> panels;

    {
        const auto f = band_forcing(4.0, true);
        const Solution1D u(f, Solution1D::Mode::FullDirichlet);
        io::SvgPanel panel;
        panel.title = "reversed bands, a = 4 (interior minimum at x = 0)";
        io::SvgSeries ser;
        ser.label = "u";
        for (int i = 0; i <= 512; ++i) {
            const double x = -4.0 + 8.0 * i / 512.0;
            ser.x.push_back(x);
            ser.y.push_back(u.eval(x));
        }
        panel.series.push_back(std::move(ser));
        panels.push_back(std::move(panel));
        io::write_file(opts.out_dir / "figure2_a4.csv",
                       io::csv_from_columns({"x", "u"}, {panels.back().series[0].x,
                                                         panels.back().series[0].y}));
    }
    {
        io::SvgPanel panel;
        panel.title = "center value u(0) against a (zero at a = " +
                      config::format_double(astar) + ")";
        io::SvgSeries ser;
        ser.label = "u(0)";
        for (int i = 0; i <= 100; ++i) {
            const double a = 3.0 + i / 100.0;
            const Solution1D u(band_forcing(a, true), Solution1D::Mode::FullDirichlet);
            ser.x.push_back(a);
            ser.y.push_back(u.eval(0.0));
        }
        io::write_file(opts.out_dir / "figure2_center_value.csv",
                       io::csv_from_columns({"a", "u0"}, {ser.x, ser.y}));
        panel.series.push_back(std::move(ser));
        panels.push_back(std::move(panel));
    }
    {
        const double b = 0.5;
        const double a = 2.0 + std::sqrt(2.0);
        const PiecewiseForcing f(
            {
                {-(a + b), -(1.0 + b), ConstantPiece{1.0}},
                {-(1.0 + b), -b, ConstantPiece{-1.0}},
                {-b, b, ConstantPiece{0.0}},
                {b, 1.0 + b, ConstantPiece{-1.0}},
                {1.0 + b, a + b, ConstantPiece{1.0}},
            },
            -(a + b), a + b);
        const Solution1D u(f, Solution1D::Mode::FullDirichlet);
        const auto cls = classify(f, 4096, Solution1D::Mode::FullDirichlet, tol);
        io::SvgPanel panel;
        std::ostringstream title;
        title << "zero band b = 0.5: " << to_string(cls.verdict);
        if (!cls.regions.empty()) {
            title << " on [" << config::format_double(cls.regions[0].lo) << ", "
                  << config::format_double(cls.regions[0].hi) << "]";
        }
        panel.title = title.str();
        io::SvgSeries ser;
        ser.label = "u";
        for (int i = 0; i <= 512; ++i) {
            const double x = -(a + b) + 2.0 * (a + b) * i / 512.0;
            ser.x.push_back(x);
            ser.y.push_back(u.eval(x));
        }
        panel.series.push_back(std::move(ser));
        panels.push_back(std::move(panel));
        io::write_file(opts.out_dir / "figure2_deadcore.csv",
                       io::csv_from_columns({"x", "u"}, {panels.back().series[0].x,
                                                         panels.back().series[0].y}));
    }

    io::write_file(opts.out_dir / "figure2.svg", io::svg_line_plot(panels));
    config::Node rep;
    rep.set("command", "reproduce figure2");
    auto& tols = rep.add_child("tolerances");
    for (const auto& [k, v] : tol.named()) tols.set_double(k, v);
    auto& results = rep.add_child("results");
    results.set_double("critical_amplitude", astar);
    emit_report(opts.out_dir, "figure2", rep);
    return kExitOk;
}

int reproduce_table(const CliOptions& opts, const Tolerances& tol) {
    struct Row {
        std::string name;
        PiecewiseForcing f;
        Solution1D::Mode mode;
    };
    std::vector<Row> rows;
    for (double a : {1.0, 1.8, 2.0, 2.2})
        rows.push_back({"bands a=" + config::format_double(a), band_forcing(a, false),
                        Solution1D::Mode::FullDirichlet});
    rows.push_back({"power tail beta=1/2 (small C)",
                    PiecewiseForcing({{0.0, 0.5, ConstantPiece{1.0}},
                                      {0.5, 1.0, PowerSingularityPiece{0.01, 0.5, 1.0}}},
                                     0.0, 1.0),
                    Solution1D::Mode::Radial});
    rows.push_back({"power tail beta=3/2 (large F/C)",
                    PiecewiseForcing({{0.0, 0.9, ConstantPiece{10.0}},
                                      {0.9, 1.0, PowerSingularityPiece{0.1, 1.5, 1.0}}},
                                     0.0, 1.0),
                    Solution1D::Mode::Radial});

    std::ostringstream table;
    table << "forcing                          balance   decay     flatness  classification\n";
    table << "-------------------------------- --------- --------- --------- ---------------\n";
    config::Node rep;
    rep.set("command", "reproduce table-conditions");
    auto& tols = rep.add_child("tolerances");
    for (const auto& [k, v] : tol.named()) tols.set_double(k, v);
    auto& results = rep.add_child("results");
    for (const auto& row : rows) {
        std::string balance = "-", decay = "-", flatness = "-";
        try {
            ConditionReport cr = check_conditions(row.f, {}, tol);
            balance = to_string(cr.balance);
            decay = to_string(cr.decay);
            flatness = to_string(cr.flatness);
        } catch (const Error&) {
        }
        const auto cls = classify(row.f, 1024, row.mode, tol);
        table << row.name;
        for (std::size_t i = row.name.size(); i < 33; ++i) table << ' ';
        auto pad = [&](const std::string& s) {
            table << s;
            for (std::size_t i = s.size(); i < 10; ++i) table << ' ';
        };
        pad(balance);
        pad(decay);
        pad(flatness);
        table << to_string(cls.verdict) << "\n";
        auto& rn = results.add_child("row");
        rn.set("name", row.name);
        rn.set("balance", balance);
        rn.set("decay", decay);
        rn.set("flatness", flatness);
        rn.set("classification", to_string(cls.verdict));
    }
    io::write_file(opts.out_dir / "conditions_table.txt", table.str());
    emit_report(opts.out_dir, "conditions_table", rep);
    return kExitOk;
}

}  // namespace

int run_command(const std::string& command, const config::Node& cfg, const CliOptions& opts) {
    validate_schema(cfg);
    const Tolerances tol = tolerances_from(cfg, opts);
    if (command == "solve1d") return cmd_solve1d(cfg, opts, tol);
    if (command == "check") return cmd_check(cfg, opts, tol);
    if (command == "solve-nd") return cmd_solve_nd(cfg, opts, tol);
    if (command == "certify") return cmd_certify(cfg, opts, tol);
    if (command == "semilinear") return cmd_semilinear(cfg, opts, tol);
    if (command == "parabolic") return cmd_parabolic(cfg, opts, tol);
    if (command == "reproduce") {
        if (opts.reproduce_target == "figure1") return reproduce_figure1(opts, tol);
        if (opts.reproduce_target == "figure2") return reproduce_figure2(opts, tol);
        if (opts.reproduce_target == "table-conditions") return reproduce_table(opts, tol);
        throw config::ConfigError(
            "reproduce target must be figure1 | figure2 | table-conditions");
    }
    throw config::ConfigError("unknown command: " + command);
}

}  // namespace smplab::cli
