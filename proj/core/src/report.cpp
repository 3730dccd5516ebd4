#include "report_internal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "dht/common.hpp"

namespace dht::detail {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, ptr};
}

void ensure_dir(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) throw ConfigError("cannot create directory '" + path + "': " + ec.message());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

namespace {

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg_plot(const std::string& title, const std::vector<double>& x,
                            const std::vector<PlotSeries>& series) {
    const double width = 640.0, height = 400.0;
    const double ml = 60.0, mr = 16.0, mt = 32.0, mb = 40.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = x.empty() ? 0.0 : x.front(), xmax = x.empty() ? 1.0 : x.back();
    double ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const auto& s : series) {
        for (double v : s.y) {
            if (!std::isfinite(v)) continue;
            if (first) {
                ymin = ymax = v;
                first = false;
            } else {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        }
    }
    if (ymax - ymin < 1e-300) {
        ymax += 1.0;
        ymin -= 1.0;
    }
    if (xmax - xmin < 1e-300) xmax = xmin + 1.0;

    auto px = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double v) { return mt + (ymax - v) / (ymax - ymin) * ph; };

    static const char* colors[] = {"#1f6fb4", "#c0392b", "#27805d", "#8e44ad"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
           "viewBox=\"0 0 640 400\">\n";
    svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    svg += "<text x=\"320\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + title + "</text>\n";
    svg += "<rect x=\"" + svg_coord(ml) + "\" y=\"" + svg_coord(mt) + "\" width=\"" +
           svg_coord(pw) + "\" height=\"" + svg_coord(ph) +
           "\" fill=\"none\" stroke=\"#444444\"/>\n";

    for (int t = 0; t <= 4; ++t) {
        const double xv = xmin + (xmax - xmin) * t / 4.0;
        const double yv = ymin + (ymax - ymin) * t / 4.0;
        svg += "<text x=\"" + svg_coord(px(xv)) + "\" y=\"" + svg_coord(height - 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
               format_double(xv) + "</text>\n";
        svg += "<text x=\"" + svg_coord(ml - 6.0) + "\" y=\"" + svg_coord(py(yv) + 3.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
               format_double(yv) + "</text>\n";
    }

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        bool open = false;
        std::string path;
        for (std::size_t i = 0; i < s.y.size() && i < x.size(); ++i) {
            if (!std::isfinite(s.y[i])) {
                open = false;
                continue;
            }
            path += open ? " L " : " M ";
            path += svg_coord(px(x[i])) + " " + svg_coord(py(s.y[i]));
            open = true;
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" +
               colors[si % 4] + "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + svg_coord(ml + 8.0 + 120.0 * si) + "\" y=\"" +
               svg_coord(mt + 14.0) + "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" +
               colors[si % 4] + "\">" + s.name + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace dht::detail
