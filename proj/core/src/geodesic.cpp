#include "dht/geodesic.hpp"

#include <cmath>
#include <numbers>

namespace dht {

SpacetimeMetric SpacetimeMetric::schwarzschild(double m) {
    if (m <= 0.0) throw ConfigError("schwarzschild: mass must be > 0");
    return {Kind::schwarzschild, m};
}

Vec4 SpacetimeMetric::components(const Vec4& x) const {
    if (kind == Kind::minkowski) return {-1.0, 1.0, 1.0, 1.0};
    const double r = x[1], th = x[2];
    if (r <= 2.0 * mass) throw NumericError("schwarzschild metric evaluated at r <= 2M");
    const double f = 1.0 - 2.0 * mass / r;
    const double s = std::sin(th);
    return {-f, 1.0 / f, r * r, r * r * s * s};
}

SpacetimeMetric::Kind parse_spacetime(const std::string& s) {
    if (s == "minkowski") return SpacetimeMetric::Kind::minkowski;
    if (s == "schwarzschild") return SpacetimeMetric::Kind::schwarzschild;
    throw ConfigError("unknown spacetime '" + s + "' (expected minkowski|schwarzschild)");
}

std::string to_string(SpacetimeMetric::Kind k) {
    return k == SpacetimeMetric::Kind::minkowski ? "minkowski" : "schwarzschild";
}

Projection parse_projection(const std::string& s) {
    if (s == "coords" || s == "coordinates") return Projection::coordinates;
    if (s == "acceleration") return Projection::acceleration;
    throw ConfigError("unknown projection '" + s + "' (expected coords|acceleration)");
}

std::string to_string(Projection p) {
    return p == Projection::coordinates ? "coords" : "acceleration";
}

ChristoffelSymbols christoffel(const SpacetimeMetric& metric, const Vec4& x) {
    ChristoffelSymbols g{};
    if (metric.kind == SpacetimeMetric::Kind::minkowski) return g;

    const double m = metric.mass;
    const double r = x[1], th = x[2];
    if (r <= 2.0 * m) throw NumericError("christoffel: r <= 2M is outside the domain");
    const double f = 1.0 - 2.0 * m / r;
    const double sth = std::sin(th), cth = std::cos(th);

    g[0][0][1] = g[0][1][0] = m / (r * r * f);
    g[1][0][0] = m * f / (r * r);
    g[1][1][1] = -m / (r * r * f);
    g[1][2][2] = -r * f;
    g[1][3][3] = -r * f * sth * sth;
    g[2][1][2] = g[2][2][1] = 1.0 / r;
    g[2][3][3] = -sth * cth;
    g[3][1][3] = g[3][3][1] = 1.0 / r;
    g[3][2][3] = g[3][3][2] = cth / sth;
    return g;
}

namespace {

struct Derivative {
    Vec4 dx;
    Vec4 du;
};

Derivative rhs(const SpacetimeMetric& metric, const GeodesicState& s) {
    const auto gamma = christoffel(metric, s.x);
    Derivative d;
    d.dx = s.u;
    for (int sig = 0; sig < 4; ++sig) {
        double acc = 0.0;
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                acc += gamma[sig][mu][nu] * s.u[mu] * s.u[nu];
            }
        }
        d.du[sig] = -acc;
    }
    return d;
}

GeodesicState advance(const GeodesicState& s, const Derivative& d, double dt) {
    GeodesicState out;
    for (int i = 0; i < 4; ++i) {
        out.x[i] = s.x[i] + dt * d.dx[i];
        out.u[i] = s.u[i] + dt * d.du[i];
    }
    return out;
}

bool finite(const GeodesicState& s) {
    for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.u[i])) return false;
    }
    return true;
}

}  // namespace

GeodesicTrajectory integrate_geodesic(const SpacetimeMetric& metric, const GeodesicState& initial,
                                      double ds, int n_steps) {
    if (ds <= 0.0) throw ConfigError("integrate_geodesic: ds must be > 0");
    if (n_steps < 2) throw ConfigError("integrate_geodesic: n_steps must be >= 2");

    GeodesicTrajectory traj{metric, ds, {}};
    traj.samples.reserve(n_steps + 1);
    traj.samples.push_back(initial);

    GeodesicState s = initial;
    for (int step = 0; step < n_steps; ++step) {
        try {
            const auto k1 = rhs(metric, s);
            const auto k2 = rhs(metric, advance(s, k1, 0.5 * ds));
            const auto k3 = rhs(metric, advance(s, k2, 0.5 * ds));
            const auto k4 = rhs(metric, advance(s, k3, ds));
            GeodesicState next;
            for (int i = 0; i < 4; ++i) {
                next.x[i] = s.x[i] + ds / 6.0 * (k1.dx[i] + 2.0 * k2.dx[i] + 2.0 * k3.dx[i] + k4.dx[i]);
                next.u[i] = s.u[i] + ds / 6.0 * (k1.du[i] + 2.0 * k2.du[i] + 2.0 * k3.du[i] + k4.du[i]);
            }
            s = next;
        } catch (const NumericError&) {
            throw NumericError("integration aborted at step " + std::to_string(step) +
                               ": horizon crossing");
        }
        if (!finite(s)) {
            throw NumericError("integration aborted at step " + std::to_string(step) +
                               ": non-finite state");
        }
        if (metric.kind == SpacetimeMetric::Kind::schwarzschild && s.x[1] <= 2.0 * metric.mass) {
            throw NumericError("integration aborted at step " + std::to_string(step) +
                               ": horizon crossing");
        }
        traj.samples.push_back(s);
    }
    return traj;
}

GeodesicState circular_orbit_state(const SpacetimeMetric& metric, double r) {
    GeodesicState s;
    if (metric.kind == SpacetimeMetric::Kind::minkowski) {
        s.x = {0.0, r, 0.0, 0.0};
        const Vec4 v = {0.0, 0.25, 0.2, 0.1};
        const double norm2 = v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
        s.u = {std::sqrt(1.0 + norm2), v[1], v[2], v[3]};
        return s;
    }
    const double m = metric.mass;
    if (r <= 3.0 * m) {
        throw NumericError("circular_orbit_state: timelike circular orbits need r > 3M");
    }
    const double omega = std::sqrt(m / (r * r * r));  // dphi/dt
    const double f = 1.0 - 2.0 * m / r;
    const double ut = 1.0 / std::sqrt(f - r * r * omega * omega);
    s.x = {0.0, r, std::numbers::pi / 2.0, 0.0};  // equatorial plane
    s.u = {ut, 0.0, 0.0, omega * ut};
    return s;
}

GeodesicState eccentric_orbit_state(const SpacetimeMetric& metric, double r, double ur) {
    auto s = circular_orbit_state(metric, r);
    if (metric.kind == SpacetimeMetric::Kind::minkowski) {
        s.u[1] += ur;
        return s;
    }
    const double f = 1.0 - 2.0 * metric.mass / r;
    s.u[1] = ur;
    // -f (u^t)^2 + (u^r)^2/f + r^2 (u^phi)^2 = -1
    const double omega_ut = s.u[3];
    s.u[0] = std::sqrt((1.0 + ur * ur / f + r * r * omega_ut * omega_ut) / f);
    return s;
}

double orbit_energy(const SpacetimeMetric& metric, const GeodesicState& s) {
    if (metric.kind == SpacetimeMetric::Kind::minkowski) return s.u[0];
    return (1.0 - 2.0 * metric.mass / s.x[1]) * s.u[0];
}

double orbit_angular_momentum(const GeodesicState& s) {
    const double sth = std::sin(s.x[2]);
    return s.x[1] * s.x[1] * sth * sth * s.u[3];
}

std::vector<EventPoint> sample_events(const GeodesicTrajectory& traj, int stride,
                                      Projection projection) {
    if (stride < 1) throw ConfigError("sample_events: stride must be >= 1");
    const auto& smp = traj.samples;
    const std::size_t n = smp.size();
    if (n == 0) throw NumericError("sample_events: empty trajectory");

    std::vector<EventPoint> events;
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < n; i += stride) {
        EventPoint e;
        e.id = id++;
        if (projection == Projection::coordinates) {
            e.coords.assign(smp[i].x.begin(), smp[i].x.end());
        } else {
            // du/ds by second-order differences along the stored samples
            Vec4 dudS;
            const double two_ds = 2.0 * traj.step;
            for (int c = 0; c < 4; ++c) {
                if (i == 0) {
                    dudS[c] = (-3.0 * smp[0].u[c] + 4.0 * smp[1].u[c] - smp[2].u[c]) / two_ds;
                } else if (i + 1 == n) {
                    dudS[c] = (3.0 * smp[i].u[c] - 4.0 * smp[i - 1].u[c] + smp[i - 2].u[c]) / two_ds;
                } else {
                    dudS[c] = (smp[i + 1].u[c] - smp[i - 1].u[c]) / two_ds;
                }
            }
            const auto gamma = christoffel(traj.metric, smp[i].x);
            e.coords.resize(4);
            for (int sig = 0; sig < 4; ++sig) {
                double acc = dudS[sig];
                for (int mu = 0; mu < 4; ++mu) {
                    for (int nu = 0; nu < 4; ++nu) {
                        acc += gamma[sig][mu][nu] * smp[i].u[mu] * smp[i].u[nu];
                    }
                }
                e.coords[sig] = acc;
            }
        }
        events.push_back(std::move(e));
    }
    if (events.empty()) throw NumericError("sample_events: empty selection");
    return events;
}

}  // namespace dht
