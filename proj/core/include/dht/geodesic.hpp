#pragma once

#include <array>
#include <string>
#include <vector>

#include "dht/dataset.hpp"

namespace dht {

using Vec4 = std::array<double, 4>;
using ChristoffelSymbols = std::array<std::array<std::array<double, 4>, 4>, 4>;  // [sigma][mu][nu]

// Built-in spacetimes, signature (-,+,+,+), units G = c = 1.
// Coordinates: (t, x, y, z) for minkowski, (t, r, theta, phi) for schwarzschild.
struct SpacetimeMetric {
    enum class Kind { minkowski, schwarzschild };

    Kind kind = Kind::minkowski;
    double mass = 1.0;  // schwarzschild only

    static SpacetimeMetric minkowski() { return {Kind::minkowski, 0.0}; }
    static SpacetimeMetric schwarzschild(double m);

    // diagonal metric components g_{mu mu} at x
    Vec4 components(const Vec4& x) const;
};

SpacetimeMetric::Kind parse_spacetime(const std::string& s);
std::string to_string(SpacetimeMetric::Kind k);

struct GeodesicState {
    Vec4 x{};  // coordinates
    Vec4 u{};  // 4-velocity dx/ds
};

struct GeodesicTrajectory {
    SpacetimeMetric metric;
    double step = 0.0;  // uniform affine-parameter step ds
    std::vector<GeodesicState> samples;

    double affine(std::size_t i) const { return static_cast<double>(i) * step; }
};

enum class Projection { coordinates, acceleration };
Projection parse_projection(const std::string& s);
std::string to_string(Projection p);

// Closed-form symbols, symmetric in the lower indices. Schwarzschild
// evaluation requires r > 2M.
ChristoffelSymbols christoffel(const SpacetimeMetric& metric, const Vec4& x);

// Classical RK4 on (x' = u, u'^s = -Gamma^s_{mu nu} u^mu u^nu); returns
// n_steps + 1 samples. Horizon crossing or a non-finite state aborts with
// the failing step index.
GeodesicTrajectory integrate_geodesic(const SpacetimeMetric& metric, const GeodesicState& initial,
                                      double ds, int n_steps);

// Equatorial circular-orbit initial state at radius r (schwarzschild,
// requires r > 3M) or a unit-normalized straight line (minkowski).
GeodesicState circular_orbit_state(const SpacetimeMetric& metric, double r);

// Circular-orbit state with a radial kick u^r = ur, re-normalized to a unit
// timelike 4-velocity; carries real truncation error under integration.
GeodesicState eccentric_orbit_state(const SpacetimeMetric& metric, double r, double ur);

// Conserved Killing-vector quantities E = (1-2M/r) dt/ds, L = r^2 sin^2(th) dphi/ds.
double orbit_energy(const SpacetimeMetric& metric, const GeodesicState& s);
double orbit_angular_momentum(const GeodesicState& s);

// Every stride-th sample (indices 0, stride, 2*stride, ...) becomes an
// EventPoint. Coordinates mode emits x; acceleration mode emits the geodesic
// residual d2x/ds2 + Gamma u u with du/ds by finite differences.
std::vector<EventPoint> sample_events(const GeodesicTrajectory& traj, int stride,
                                      Projection projection = Projection::coordinates);

}  // namespace dht
