#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "smplab/config.hpp"

namespace smplab::io {

void write_file(const std::filesystem::path& path, const std::string& content);

/// CSV from equal-length columns; numbers formatted shortest-exact.
std::string csv_from_columns(const std::vector<std::string>& headers,
                             const std::vector<std::vector<double>>& columns);

/// JSON mirror of a config tree (machine-readable counterpart of a report).
std::string json_of_node(const config::Node& node);

struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
};

struct SvgPanel {
    std::string title;
    std::vector<SvgSeries> series;
    bool zero_line = true;
};

/// Hand-emitted polyline plot; panels are laid out two per row.
std::string svg_line_plot(const std::vector<SvgPanel>& panels, int panel_width = 460,
                          int panel_height = 340);

}  // namespace smplab::io
