#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace dht::detail {

// Shortest round-trip decimal form; identical input bits give identical text.
std::string format_double(double v);

void ensure_dir(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

struct PlotSeries {
    std::string name;
    std::vector<double> y;
};

// Minimal static line plot: axes box, ticks, one polyline per series.
std::string render_svg_plot(const std::string& title, const std::vector<double>& x,
                            const std::vector<PlotSeries>& series);

}  // namespace dht::detail
