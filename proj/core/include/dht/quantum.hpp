#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "dht/density.hpp"

namespace dht {

struct ExternalPotential {
    std::vector<double> u;

    static ExternalPotential zero(int bins) { return {std::vector<double>(bins, 0.0)}; }
};

// Grid-aligned (rho, S, psi) triple with psi = sqrt(rho) e^{iS} cellwise.
struct QuantumState {
    DensityGrid grid;
    PhaseField phase;
    std::vector<std::complex<double>> psi;
};

struct ActionBreakdown {
    double kinetic = 0.0;        // sum of int (dS)^2 rho dQ
    double dendro_energy = 0.0;  // sum of int (S_t - S_{t-1}) rho_t dQ
    double variety = 0.0;        // Fisher-form variety, -int (d rho)^2 / rho dQ
    double potential = 0.0;      // sum of int U rho dQ
    double total = 0.0;          // kinetic + dendro_energy - variety + potential
};

struct VarietyExpansion {
    double c_const = 0.0;   // -6 * window mass (the rho^3 term after normalization)
    double c_fisher = 0.0;  // -int (d rho)^2 / rho dQ
    double residual = 0.0;  // direct shift-integral value minus the two retained terms
    double err_const = 0.0;   // Richardson quadrature error estimates
    double err_fisher = 0.0;
    int window_cells = 0;
    int excluded_cells = 0;
};

struct Residuals {
    std::vector<double> hamilton_jacobi;
    std::vector<double> continuity;
};

// z_v * int dQ rho(Q) int_0^1 int_0^1 (x-y)^2 rho(Q+x) rho(Q+y) dx dy with
// rho extended by zero outside the grid. Trapezoid nodes on all three axes
// use the grid step, so shifted lookups land exactly on cell centers.
double variety_continuum(const DensityGrid& grid, double z_v);

// Nested quadrature of int_0^1 int_0^1 (x-y)^2 dx dy and
// int_0^1 int_0^1 (x-y)^2 x y dx dy.
std::pair<double, double> expansion_constants();

// int (d rho)^2 / rho dQ over cells with rho > floor.
double fisher_information(const DensityGrid& grid, double floor = 1e-12);

// Leading terms of the variety expansion with Z_V = -36 / mean(rho)^2 on the
// window of cells above the floor; the residual reports everything the two
// retained terms miss (boundary clipping and higher orders included).
VarietyExpansion variety_expansion_terms(const DensityGrid& grid, double floor = 1e-12);

// U^Q = D2[sqrt(max(rho, floor))] / sqrt(max(rho, floor)); bare curvature
// ratio by default, the Bohmian-signed variant (-1/2 prefactor) behind a flag.
std::vector<double> quantum_potential(const DensityGrid& grid, double floor = 1e-12,
                                      bool bohmian_sign = false);

QuantumState wavefunction(const DensityGrid& grid, const PhaseField& phase);

// residual_HJ   = (S_curr - S_prev) + (dS)^2 + U + U^Q   on the current state
// residual_cont = (rho_curr - rho_prev) - d(rho dS)
// `continuity_squared` evaluates the printed form with the flux squared.
Residuals bohmian_residuals(const QuantumState& prev, const QuantumState& curr,
                            const ExternalPotential& u, bool continuity_squared = false,
                            double floor = 1e-12);

// H = rho * ((dS)^2/2 - (d rho / rho)^2 + U); cells with rho below the floor
// are reported as NaN gaps.
std::vector<double> hamiltonian_density(const DensityGrid& grid, const PhaseField& phase,
                                        const ExternalPotential& u, double floor = 1e-12);
// Paper default U = rho.
std::vector<double> hamiltonian_density(const DensityGrid& grid, const PhaseField& phase);

ActionBreakdown action_evaluate(std::span<const QuantumState> states, const ExternalPotential& u,
                                double floor = 1e-12);

// int Q rho(Q) dQ, the expected view.
double grid_first_moment(const DensityGrid& grid);

}  // namespace dht
