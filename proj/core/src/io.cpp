#include "smplab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace smplab::io {

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path.string());
    out << content;
}

std::string csv_from_columns(const std::vector<std::string>& headers,
                             const std::vector<std::vector<double>>& columns) {
    if (headers.size() != columns.size())
        throw std::invalid_argument("csv: header/column count mismatch");
    std::string out;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        out += headers[c];
        out += (c + 1 < headers.size()) ? ',' : '\n';
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& col : columns) {
        if (col.size() != rows) throw std::invalid_argument("csv: ragged columns");
    }
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out += config::format_double(columns[c][r]);
            out += (c + 1 < columns.size()) ? ',' : '\n';
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json node_to_json(const config::Node& node) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : node.scalars) {
        // numbers stay numbers in the mirror
        char* end = nullptr;
        const double d = std::strtod(v.c_str(), &end);
        if (end != v.c_str() && *end == '\0' && !v.empty()) {
            j[k] = d;
        } else if (v == "true" || v == "false") {
            j[k] = (v == "true");
        } else {
            j[k] = v;
        }
    }
    // repeated child names become arrays
    for (const auto& c : node.children) {
        const auto siblings = node.children_named(c.name);
        if (j.contains(c.name)) continue;
        if (siblings.size() > 1) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto* s : siblings) arr.push_back(node_to_json(*s));
            j[c.name] = arr;
        } else {
            j[c.name] = node_to_json(c);
        }
    }
    return j;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

std::string json_of_node(const config::Node& node) { return node_to_json(node).dump(2) + "\n"; }

std::string svg_line_plot(const std::vector<SvgPanel>& panels, int panel_width,
                          int panel_height) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b"};
    const int per_row = 2;
    const int rows = (static_cast<int>(panels.size()) + per_row - 1) / per_row;
    const int cols = std::min<int>(per_row, static_cast<int>(panels.size()));
    const int W = cols * panel_width;
    const int H = rows * panel_height;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const auto& panel = panels[pi];
        const int ox = static_cast<int>(pi) % per_row * panel_width;
        const int oy = static_cast<int>(pi) / per_row * panel_height;
        const double ml = 56, mr = 16, mt = 34, mb = 42;
        const double px0 = ox + ml, py0 = oy + mt;
        const double pw = panel_width - ml - mr, ph = panel_height - mt - mb;

        double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
        bool first = true;
        for (const auto& ser : panel.series) {
            for (std::size_t i = 0; i < ser.x.size(); ++i) {
                if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
                if (first) {
                    xmin = xmax = ser.x[i];
                    ymin = ymax = ser.y[i];
                    first = false;
                } else {
                    xmin = std::min(xmin, ser.x[i]);
                    xmax = std::max(xmax, ser.x[i]);
                    ymin = std::min(ymin, ser.y[i]);
                    ymax = std::max(ymax, ser.y[i]);
                }
            }
        }
        if (panel.zero_line) {
            ymin = std::min(ymin, 0.0);
            ymax = std::max(ymax, 0.0);
        }
        if (xmax - xmin <= 0) xmax = xmin + 1;
        if (ymax - ymin <= 0) ymax = ymin + 1;
        const double ypad = 0.05 * (ymax - ymin);
        ymin -= ypad;
        ymax += ypad;

        auto X = [&](double x) { return px0 + (x - xmin) / (xmax - xmin) * pw; };
        auto Y = [&](double y) { return py0 + ph - (y - ymin) / (ymax - ymin) * ph; };

        s << "<text x=\"" << ox + panel_width / 2 << "\" y=\"" << oy + 20
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
          << panel.title << "</text>\n";
        // frame
        s << "<rect x=\"" << px0 << "\" y=\"" << py0 << "\" width=\"" << pw << "\" height=\"" << ph
          << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        // ticks
        for (int t = 0; t <= 4; ++t) {
            const double xv = xmin + (xmax - xmin) * t / 4;
            const double yv = ymin + (ymax - ymin) * t / 4;
            s << "<line x1=\"" << X(xv) << "\" y1=\"" << py0 + ph << "\" x2=\"" << X(xv)
              << "\" y2=\"" << py0 + ph + 4 << "\" stroke=\"#333\"/>\n";
            s << "<text x=\"" << X(xv) << "\" y=\"" << py0 + ph + 18
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
              << fmt_tick(xv) << "</text>\n";
            s << "<line x1=\"" << px0 - 4 << "\" y1=\"" << Y(yv) << "\" x2=\"" << px0 << "\" y2=\""
              << Y(yv) << "\" stroke=\"#333\"/>\n";
            s << "<text x=\"" << px0 - 7 << "\" y=\"" << Y(yv) + 3
              << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
              << fmt_tick(yv) << "</text>\n";
        }
        if (panel.zero_line && ymin < 0.0 && ymax > 0.0) {
            s << "<line x1=\"" << px0 << "\" y1=\"" << Y(0) << "\" x2=\"" << px0 + pw << "\" y2=\""
              << Y(0) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
        }
        for (std::size_t si = 0; si < panel.series.size(); ++si) {
            const auto& ser = panel.series[si];
            s << "<polyline fill=\"none\" stroke=\"" << kColors[si % 6]
              << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < ser.x.size(); ++i) {
                if (!std::isfinite(ser.y[i])) continue;
                s << X(ser.x[i]) << ',' << Y(ser.y[i]) << ' ';
            }
            s << "\"/>\n";
            if (!ser.label.empty()) {
                s << "<text x=\"" << px0 + 8 << "\" y=\"" << py0 + 14 + 14 * si
                  << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << kColors[si % 6]
                  << "\">" << ser.label << "</text>\n";
            }
        }
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace smplab::io
