#pragma once

#include <functional>
#include <vector>

#include "dht/common.hpp"
#include "dht/views.hpp"

namespace dht {

// Discrete masses over the unique pairwise differences Q_j.
struct DifferencePdf {
    std::vector<double> support;  // strictly increasing, inside (-1, 1)
    std::vector<double> masses;   // > 0, sum to 1
    std::size_t merged = 0;       // distinct raw values absorbed by tolerance merging

    std::size_t atoms() const { return support.size(); }
};

// Histogram estimate of the continuum density on a uniform grid.
struct DensityGrid {
    GridGeometry geom;
    std::vector<double> density;

    double mass() const;  // h * sum(density)

    // Synthetic field helper for manufactured and analytic cases.
    static DensityGrid from_function(const GridGeometry& geom,
                                     const std::function<double(double)>& f,
                                     bool normalize = true);
};

// Phase values at cell centers: S[b] = cumulative trapezoid of rho(u)*u^2
// between centers, gauged to S = 0 at the lowest cell. Non-decreasing since
// the integrand is non-negative.
struct PhaseField {
    GridGeometry geom;
    std::vector<double> s;
};

// Masses of the unique q_ik over all N(N-1) ordered off-diagonal entries.
// "Unique" is decided by sorted single-linkage merging with gap <= tol;
// exact dyadic inputs are unaffected by the default tol.
DifferencePdf difference_pdf(const DifferenceMatrix& q, double tol, bool absolute = false);

// Cells are left-closed [lo + b*h, lo + (b+1)*h); an atom exactly at hi goes
// to the last cell. Support outside [lo, hi] is a domain error.
DensityGrid to_grid(const DifferencePdf& pdf, int bins, double lo, double hi);

PhaseField phase_field(const DensityGrid& grid);

// Midpoint quadrature of (dS)^2 * rho with dS by the shared stencils.
double kinetic_energy_continuum(const DensityGrid& grid, const PhaseField& phase);

}  // namespace dht
