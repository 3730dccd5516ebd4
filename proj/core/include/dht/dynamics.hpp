#pragma once

#include <span>
#include <vector>

#include "dht/density.hpp"
#include "dht/quantum.hpp"

namespace dht {

enum class UMode { zero, one, rho };
UMode parse_u_mode(const std::string& s);
std::string to_string(UMode m);

// External potential per mode: zeros, the constant int(rho dQ) = 1,
// or U = rho from the Hamiltonian section.
ExternalPotential make_potential(const DensityGrid& grid, UMode mode);

// One dendrogram-time step: the rebuilt tree and its (rho, S) fields on the
// sequence's shared grid.
struct SequenceStep {
    Dendrogram tree;
    DensityGrid grid;
    PhaseField phase;
};

struct DendrogramSequence {
    GridGeometry geom;
    std::vector<SequenceStep> steps;
};

// Caller-supplied proposal events; ids must extend the current id range.
struct CandidateSet {
    std::vector<EventPoint> events;
};

struct SequenceConfig {
    DistanceMetric metric = DistanceMetric::euclidean;
    Linkage linkage = Linkage::average;
    GridGeometry geom;
    double tol = 1e-12;
    double density_floor = 1e-12;
    bool absolute_differences = false;
    UMode u_mode = UMode::zero;
};

// Full rebuild for one prefix of the event list.
SequenceStep build_step(std::span<const EventPoint> events, const SequenceConfig& cfg);

// Rebuild-from-scratch dynamics: one step per prefix of length start..N.
DendrogramSequence grow_sequence(const std::vector<EventPoint>& events, int start,
                                 const SequenceConfig& cfg);

// Best-match distance between steps: L2 distance of the gridded
// difference-densities, sqrt(h * sum (rho_a - rho_b)^2).
double dendrogram_distance(const SequenceStep& a, const SequenceStep& b);

// Sum over consecutive steps of int (S_t - S_{t-1}) rho_t dQ.
double sequence_differences_energy(const DendrogramSequence& seq);

struct LeastActionResult {
    std::size_t chosen_index = 0;
    EventPoint chosen;
    std::vector<double> increments;  // action increment per candidate
};

// Tentatively appends each candidate, rebuilds, and evaluates the action
// increment (dendrogram term + kinetic + potential - variety); appends the
// argmin candidate to `events` and its step to `seq`. Ties break toward the
// lowest candidate index.
LeastActionResult least_action_step(DendrogramSequence& seq, std::vector<EventPoint>& events,
                                    const CandidateSet& candidates, const SequenceConfig& cfg);

// The action increment a single new step contributes after `prev`.
double action_increment(const SequenceStep& prev, const SequenceStep& next,
                        const SequenceConfig& cfg);

}  // namespace dht
