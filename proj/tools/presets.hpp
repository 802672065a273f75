#pragma once

#include <string>
#include <vector>

#include "smplab/config.hpp"

namespace smplab::cli {

/// Built-in problem configurations, addressable via --preset.
std::vector<std::string> preset_names();

/// Returns the configuration tree for a named preset; throws ConfigError for
/// unknown names.
config::Node preset_config(const std::string& name);

}  // namespace smplab::cli
