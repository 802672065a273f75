#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "smplab/config.hpp"
#include "smplab/tolerances.hpp"

namespace smplab::cli {

struct CliOptions {
    std::filesystem::path out_dir = "out";
    int mesh_override = 0;  // 0 = keep configured value
    std::vector<std::pair<std::string, double>> tol_overrides;
    std::string reproduce_target;  // for the reproduce command
};

/// Exit codes: 0 success, 1 usage/config error, 2 a checked condition fails.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConditionFails = 2;

int run_command(const std::string& command, const config::Node& cfg, const CliOptions& opts);

}  // namespace smplab::cli
