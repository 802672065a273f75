#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "presets.hpp"
#include "smplab/errors.hpp"

namespace {

void print_usage() {
    std::cout
        << "usage: smplab <command> [options]\n"
        << "\n"
        << "commands:\n"
        << "  solve1d      exact two-point solve, classification, condition checks\n"
        << "  check        condition report (1d checks; hypotheses when a mesh block exists)\n"
        << "  solve-nd     finite-difference Dirichlet solve on interval/rectangle/disk\n"
        << "  certify      positivity certificate (constants, hypotheses, subsolution sandwich)\n"
        << "  semilinear   sublinear indefinite solve by bracketed iteration\n"
        << "  parabolic    theta-scheme heat flow, positivity time, decay fit\n"
        << "  reproduce    figure1 | figure2 | table-conditions\n"
        << "\n"
        << "options:\n"
        << "  --config PATH    problem configuration file\n"
        << "  --preset NAME    built-in configuration (see --list-presets)\n"
        << "  --out DIR        output directory (default: out)\n"
        << "  --mesh N         override mesh resolution\n"
        << "  --tol NAME=VAL   override a tolerance (repeatable)\n"
        << "  --list-presets   print preset names and exit\n"
        << "\n"
        << "exit codes: 0 ok, 1 usage/config error, 2 a checked condition fails\n";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace smplab;
    if (argc < 2) {
        print_usage();
        return cli::kExitUsage;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        print_usage();
        return cli::kExitOk;
    }
    if (command == "--list-presets") {
        for (const auto& name : cli::preset_names()) std::cout << name << "\n";
        return cli::kExitOk;
    }

    cli::CliOptions opts;
    std::string config_path;
    std::string preset;
    int i = 2;
    if (command == "reproduce" && i < argc && argv[i][0] != '-') {
        opts.reproduce_target = argv[i++];
    }
    for (; i < argc; ++i) {
        const std::string arg = argv[i];
        auto need_value = [&](const char* flag) -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "error: " << flag << " needs a value\n";
                std::exit(cli::kExitUsage);
            }
            return argv[++i];
        };
        if (arg == "--config") {
            config_path = need_value("--config");
        } else if (arg == "--preset") {
            preset = need_value("--preset");
        } else if (arg == "--out") {
            opts.out_dir = need_value("--out");
        } else if (arg == "--mesh") {
            opts.mesh_override = std::atoi(need_value("--mesh").c_str());
        } else if (arg == "--tol") {
            const std::string kv = need_value("--tol");
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: --tol expects NAME=VALUE\n";
                return cli::kExitUsage;
            }
            opts.tol_overrides.emplace_back(kv.substr(0, eq), std::atof(kv.c_str() + eq + 1));
        } else if (arg == "--list-presets") {
            for (const auto& name : cli::preset_names()) std::cout << name << "\n";
            return cli::kExitOk;
        } else {
            std::cerr << "error: unknown option " << arg << "\n";
            return cli::kExitUsage;
        }
    }

    try {
        config::Node cfg;
        if (!config_path.empty() && !preset.empty())
            throw config::ConfigError("--config and --preset are mutually exclusive");
        if (!config_path.empty()) {
            std::ifstream in(config_path, std::ios::binary);
            if (!in) throw config::ConfigError("cannot read config file " + config_path);
            std::ostringstream buf;
            buf << in.rdbuf();
            cfg = config::parse(buf.str());
        } else if (!preset.empty()) {
            cfg = cli::preset_config(preset);
        } else if (command != "reproduce") {
            throw config::ConfigError("provide --config PATH or --preset NAME");
        }
        return cli::run_command(command, cfg, opts);
    } catch (const config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
}
