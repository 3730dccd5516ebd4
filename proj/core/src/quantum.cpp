#include "dht/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "dht/fd.hpp"

namespace dht {

namespace {

double trapezoid_weight(int i, int last) { return (i == 0 || i == last) ? 0.5 : 1.0; }

double simpson2d(const std::function<double(double, double)>& f, int intervals) {
    // composite Simpson on [0,1]^2; `intervals` must be even
    const int n = intervals;
    const double h = 1.0 / n;
    auto w1 = [&](int i) -> double {
        if (i == 0 || i == n) return 1.0;
        return (i % 2 == 1) ? 4.0 : 2.0;
    };
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            acc += w1(i) * w1(j) * f(i * h, j * h);
        }
    }
    return acc * h * h / 9.0;
}

}  // namespace

double variety_continuum(const DensityGrid& grid, double z_v) {
    const int bins = grid.geom.bins;
    const double h = grid.geom.h();
    const int m_last = static_cast<int>(std::llround(1.0 / h));
    const auto& rho = grid.density;

    auto shifted = [&](int b, int m) -> double {
        const int idx = b + m;
        return idx < bins ? rho[idx] : 0.0;  // zero extension beyond the grid
    };

    // separable form of the inner double integral:
    // sum_{m,n} w w (x_m - x_n)^2 r_m r_n = 2 (A C - B^2)
    double acc = 0.0;
    for (int b = 0; b < bins; ++b) {
        if (rho[b] == 0.0) continue;
        double a2 = 0.0, a1 = 0.0, a0 = 0.0;
        for (int m = 0; m <= m_last; ++m) {
            const double r = shifted(b, m);
            if (r == 0.0) continue;
            const double w = trapezoid_weight(m, m_last);
            const double x = m * h;
            a2 += w * x * x * r;
            a1 += w * x * r;
            a0 += w * r;
        }
        const double inner = 2.0 * (a2 * a0 - a1 * a1);
        acc += trapezoid_weight(b, bins - 1) * rho[b] * inner;
    }
    return z_v * acc * h * h * h;
}

std::pair<double, double> expansion_constants() {
    const auto c1 = simpson2d([](double x, double y) { return (x - y) * (x - y); }, 64);
    const auto c2 = simpson2d([](double x, double y) { return (x - y) * (x - y) * x * y; }, 64);
    return {c1, c2};
}

double fisher_information(const DensityGrid& grid, double floor) {
    const auto drho = fd_gradient(grid.density, grid.geom.h());
    double acc = 0.0;
    for (int b = 0; b < grid.geom.bins; ++b) {
        if (grid.density[b] > floor) {
            acc += drho[b] * drho[b] / grid.density[b];
        }
    }
    return acc * grid.geom.h();
}

namespace {

// window mass and mean over cells above the floor
struct Window {
    double mass = 0.0;
    double mean = 0.0;
    int cells = 0;
};

Window density_window(const DensityGrid& grid, double floor) {
    Window w;
    double sum = 0.0;
    for (double d : grid.density) {
        if (d > floor) {
            sum += d;
            ++w.cells;
        }
    }
    w.mass = sum * grid.geom.h();
    w.mean = w.cells ? sum / w.cells : 0.0;
    return w;
}

DensityGrid coarsen(const DensityGrid& grid) {
    const int half = grid.geom.bins / 2;
    DensityGrid c{{grid.geom.lo, grid.geom.hi, half}, std::vector<double>(half, 0.0)};
    for (int j = 0; j < half; ++j) {
        c.density[j] = 0.5 * (grid.density[2 * j] + grid.density[2 * j + 1]);
    }
    return c;
}

}  // namespace

VarietyExpansion variety_expansion_terms(const DensityGrid& grid, double floor) {
    const auto w = density_window(grid, floor);
    if (w.cells == 0) throw NumericError("variety_expansion_terms: all cells below density floor");

    VarietyExpansion out;
    out.window_cells = w.cells;
    out.excluded_cells = grid.geom.bins - w.cells;
    out.c_const = -6.0 * w.mass;
    out.c_fisher = -fisher_information(grid, floor);

    const double z_v = -36.0 / (w.mean * w.mean);
    out.residual = variety_continuum(grid, z_v) - (out.c_const + out.c_fisher);

    if (grid.geom.bins % 2 == 0 && grid.geom.bins >= 8) {
        const auto coarse = coarsen(grid);
        const auto wc = density_window(coarse, floor);
        const double const_c = -6.0 * wc.mass;
        const double fisher_c = -fisher_information(coarse, floor);
        out.err_const = std::abs(out.c_const - const_c) / 3.0;
        out.err_fisher = std::abs(out.c_fisher - fisher_c) / 3.0;
    }
    return out;
}

std::vector<double> quantum_potential(const DensityGrid& grid, double floor, bool bohmian_sign) {
    if (floor <= 0.0) throw ConfigError("quantum_potential: floor must be > 0");
    const int bins = grid.geom.bins;
    std::vector<double> amp(bins);
    for (int b = 0; b < bins; ++b) amp[b] = std::sqrt(std::max(grid.density[b], floor));
    const auto curv = fd_second_derivative(amp, grid.geom.h());
    std::vector<double> uq(bins);
    const double scale = bohmian_sign ? -0.5 : 1.0;
    for (int b = 0; b < bins; ++b) uq[b] = scale * curv[b] / amp[b];
    return uq;
}

QuantumState wavefunction(const DensityGrid& grid, const PhaseField& phase) {
    if (grid.geom != phase.geom) throw NumericError("wavefunction: geometry mismatch");
    QuantumState state{grid, phase, {}};
    state.psi.resize(grid.geom.bins);
    for (int b = 0; b < grid.geom.bins; ++b) {
        const double amp = std::sqrt(std::max(grid.density[b], 0.0));
        state.psi[b] = std::polar(amp, phase.s[b]);
    }
    return state;
}

Residuals bohmian_residuals(const QuantumState& prev, const QuantumState& curr,
                            const ExternalPotential& u, bool continuity_squared, double floor) {
    if (prev.grid.geom != curr.grid.geom) {
        throw NumericError("bohmian_residuals: geometry mismatch");
    }
    const int bins = curr.grid.geom.bins;
    if (static_cast<int>(u.u.size()) != bins) {
        throw NumericError("bohmian_residuals: potential size mismatch");
    }
    const double h = curr.grid.geom.h();
    const auto ds = fd_gradient(curr.phase.s, h);
    const auto uq = quantum_potential(curr.grid, floor);

    Residuals res;
    res.hamilton_jacobi.resize(bins);
    std::vector<double> flux(bins);
    for (int b = 0; b < bins; ++b) {
        const double sdot = curr.phase.s[b] - prev.phase.s[b];
        res.hamilton_jacobi[b] = sdot + ds[b] * ds[b] + u.u[b] + uq[b];
        const double f = curr.grid.density[b] * ds[b];
        flux[b] = continuity_squared ? f * f : f;
    }
    const auto dflux = fd_gradient(flux, h);
    res.continuity.resize(bins);
    for (int b = 0; b < bins; ++b) {
        res.continuity[b] = (curr.grid.density[b] - prev.grid.density[b]) - dflux[b];
    }
    return res;
}

std::vector<double> hamiltonian_density(const DensityGrid& grid, const PhaseField& phase,
                                        const ExternalPotential& u, double floor) {
    if (grid.geom != phase.geom) throw NumericError("hamiltonian_density: geometry mismatch");
    const int bins = grid.geom.bins;
    if (static_cast<int>(u.u.size()) != bins) {
        throw NumericError("hamiltonian_density: potential size mismatch");
    }
    const double h = grid.geom.h();
    const auto ds = fd_gradient(phase.s, h);
    const auto drho = fd_gradient(grid.density, h);
    std::vector<double> ham(bins);
    for (int b = 0; b < bins; ++b) {
        const double rho = grid.density[b];
        if (rho < floor) {
            ham[b] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        const double ratio = drho[b] / rho;
        ham[b] = rho * (0.5 * ds[b] * ds[b] - ratio * ratio + u.u[b]);
    }
    return ham;
}

std::vector<double> hamiltonian_density(const DensityGrid& grid, const PhaseField& phase) {
    ExternalPotential u{grid.density};
    return hamiltonian_density(grid, phase, u);
}

ActionBreakdown action_evaluate(std::span<const QuantumState> states, const ExternalPotential& u,
                                double floor) {
    if (states.empty()) throw NumericError("action_evaluate: need at least one state");
    const auto geom = states.front().grid.geom;
    if (static_cast<int>(u.u.size()) != geom.bins) {
        throw NumericError("action_evaluate: potential size mismatch");
    }
    const double h = geom.h();

    ActionBreakdown out;
    for (std::size_t t = 0; t < states.size(); ++t) {
        const auto& st = states[t];
        if (st.grid.geom != geom) throw NumericError("action_evaluate: geometry mismatch");
        const auto ds = fd_gradient(st.phase.s, h);
        double kin = 0.0, pot = 0.0, dendro = 0.0;
        for (int b = 0; b < geom.bins; ++b) {
            kin += ds[b] * ds[b] * st.grid.density[b];
            pot += u.u[b] * st.grid.density[b];
            if (t > 0) {
                dendro += (st.phase.s[b] - states[t - 1].phase.s[b]) * st.grid.density[b];
            }
        }
        out.kinetic += kin * h;
        out.potential += pot * h;
        out.dendro_energy += dendro * h;
        out.variety += -fisher_information(st.grid, floor);
    }
    out.total = out.kinetic + out.dendro_energy - out.variety + out.potential;
    return out;
}

double grid_first_moment(const DensityGrid& grid) {
    double acc = 0.0;
    for (int b = 0; b < grid.geom.bins; ++b) {
        acc += grid.geom.center(b) * grid.density[b];
    }
    return acc * grid.geom.h();
}

}  // namespace dht
