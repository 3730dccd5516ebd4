#include "dht/density.hpp"

#include <algorithm>
#include <cmath>

#include "dht/fd.hpp"

namespace dht {

double DensityGrid::mass() const {
    double acc = 0.0;
    for (double d : density) acc += d;
    return geom.h() * acc;
}

DensityGrid DensityGrid::from_function(const GridGeometry& geom,
                                       const std::function<double(double)>& f,
                                       bool normalize) {
    DensityGrid g{geom, std::vector<double>(geom.bins, 0.0)};
    for (int b = 0; b < geom.bins; ++b) g.density[b] = f(geom.center(b));
    if (normalize) {
        const double m = g.mass();
        if (m <= 0.0) throw NumericError("from_function: non-positive total mass");
        for (double& d : g.density) d /= m;
    }
    return g;
}

DifferencePdf difference_pdf(const DifferenceMatrix& q, double tol, bool absolute) {
    const std::size_t n = q.n;
    if (n < 2) throw NumericError("difference_pdf: need N >= 2");
    if (tol < 0.0) throw ConfigError("difference_pdf: tol must be >= 0");

    std::vector<double> raw;
    raw.reserve(n * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i != k) raw.push_back(absolute ? std::abs(q.at(i, k)) : q.at(i, k));
        }
    }
    std::sort(raw.begin(), raw.end());

    DifferencePdf pdf;
    const double total = static_cast<double>(raw.size());
    std::size_t begin = 0;
    while (begin < raw.size()) {
        std::size_t end = begin + 1;
        std::size_t distinct = 1;
        while (end < raw.size() && raw[end] - raw[end - 1] <= tol) {
            if (raw[end] != raw[end - 1]) ++distinct;
            ++end;
        }
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) sum += raw[i];
        pdf.support.push_back(sum / static_cast<double>(end - begin));
        pdf.masses.push_back(static_cast<double>(end - begin) / total);
        pdf.merged += distinct - 1;
        begin = end;
    }
    return pdf;
}

DensityGrid to_grid(const DifferencePdf& pdf, int bins, double lo, double hi) {
    if (bins < 8) throw ConfigError("to_grid: bins must be >= 8");
    if (!(lo < hi)) throw ConfigError("to_grid: need lo < hi");
    GridGeometry geom{lo, hi, bins};
    DensityGrid grid{geom, std::vector<double>(bins, 0.0)};
    const double h = geom.h();
    for (std::size_t j = 0; j < pdf.support.size(); ++j) {
        const double x = pdf.support[j];
        if (x < lo || x > hi) {
            throw NumericError("to_grid: pdf support outside grid bounds");
        }
        int cell = static_cast<int>(std::floor((x - lo) / h));
        cell = std::clamp(cell, 0, bins - 1);
        grid.density[cell] += pdf.masses[j] / h;
    }
    return grid;
}

PhaseField phase_field(const DensityGrid& grid) {
    const int bins = grid.geom.bins;
    const double h = grid.geom.h();
    PhaseField phase{grid.geom, std::vector<double>(bins, 0.0)};
    auto integrand = [&](int b) {
        const double qc = grid.geom.center(b);
        return grid.density[b] * qc * qc;
    };
    for (int b = 1; b < bins; ++b) {
        phase.s[b] = phase.s[b - 1] + 0.5 * h * (integrand(b - 1) + integrand(b));
    }
    return phase;
}

double kinetic_energy_continuum(const DensityGrid& grid, const PhaseField& phase) {
    if (grid.geom != phase.geom) throw NumericError("kinetic_energy_continuum: geometry mismatch");
    const auto ds = fd_gradient(phase.s, grid.geom.h());
    double acc = 0.0;
    for (int b = 0; b < grid.geom.bins; ++b) {
        acc += ds[b] * ds[b] * grid.density[b];
    }
    return acc * grid.geom.h();
}

}  // namespace dht
