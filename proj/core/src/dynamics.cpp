#include "dht/dynamics.hpp"

#include <cmath>

#include "dht/fd.hpp"

namespace dht {

UMode parse_u_mode(const std::string& s) {
    if (s == "zero") return UMode::zero;
    if (s == "one") return UMode::one;
    if (s == "rho") return UMode::rho;
    throw ConfigError("unknown u_mode '" + s + "' (expected zero|one|rho)");
}

std::string to_string(UMode m) {
    switch (m) {
        case UMode::zero: return "zero";
        case UMode::one: return "one";
        case UMode::rho: return "rho";
    }
    return "?";
}

ExternalPotential make_potential(const DensityGrid& grid, UMode mode) {
    switch (mode) {
        case UMode::zero: return ExternalPotential::zero(grid.geom.bins);
        case UMode::one: return {std::vector<double>(grid.geom.bins, 1.0)};
        case UMode::rho: return {grid.density};
    }
    return ExternalPotential::zero(grid.geom.bins);
}

SequenceStep build_step(std::span<const EventPoint> events, const SequenceConfig& cfg) {
    std::vector<EventPoint> prefix{events.begin(), events.end()};
    const auto dm = pairwise_distances(prefix, cfg.metric);
    auto tree = assign_codes(agglomerate(dm, cfg.linkage));
    const auto values = event_values(tree);
    const auto q = difference_matrix(values);
    const auto pdf = difference_pdf(q, cfg.tol, cfg.absolute_differences);
    auto grid = to_grid(pdf, cfg.geom.bins, cfg.geom.lo, cfg.geom.hi);
    auto phase = phase_field(grid);
    return {std::move(tree), std::move(grid), std::move(phase)};
}

DendrogramSequence grow_sequence(const std::vector<EventPoint>& events, int start,
                                 const SequenceConfig& cfg) {
    if (start < 3) throw ConfigError("grow_sequence: start must be >= 3");
    if (static_cast<int>(events.size()) < start) {
        throw IngestionError("grow_sequence: fewer events than the starting prefix");
    }
    DendrogramSequence seq{cfg.geom, {}};
    for (std::size_t n = static_cast<std::size_t>(start); n <= events.size(); ++n) {
        seq.steps.push_back(build_step(std::span(events.data(), n), cfg));
    }
    return seq;
}

double dendrogram_distance(const SequenceStep& a, const SequenceStep& b) {
    if (a.grid.geom != b.grid.geom) throw NumericError("dendrogram_distance: geometry mismatch");
    double acc = 0.0;
    for (int i = 0; i < a.grid.geom.bins; ++i) {
        const double d = a.grid.density[i] - b.grid.density[i];
        acc += d * d;
    }
    return std::sqrt(a.grid.geom.h() * acc);
}

double sequence_differences_energy(const DendrogramSequence& seq) {
    if (seq.steps.size() < 2) {
        throw NumericError("sequence_differences_energy: need at least 2 steps");
    }
    const double h = seq.geom.h();
    double total = 0.0;
    for (std::size_t t = 1; t < seq.steps.size(); ++t) {
        double acc = 0.0;
        for (int b = 0; b < seq.geom.bins; ++b) {
            acc += (seq.steps[t].phase.s[b] - seq.steps[t - 1].phase.s[b]) *
                   seq.steps[t].grid.density[b];
        }
        total += acc * h;
    }
    return total;
}

double action_increment(const SequenceStep& prev, const SequenceStep& next,
                        const SequenceConfig& cfg) {
    if (prev.grid.geom != next.grid.geom) throw NumericError("action_increment: geometry mismatch");
    const double h = next.grid.geom.h();
    const auto ds = fd_gradient(next.phase.s, h);
    const auto u = make_potential(next.grid, cfg.u_mode);
    double dendro = 0.0, kinetic = 0.0, potential = 0.0;
    for (int b = 0; b < next.grid.geom.bins; ++b) {
        const double rho = next.grid.density[b];
        dendro += (next.phase.s[b] - prev.phase.s[b]) * rho;
        kinetic += ds[b] * ds[b] * rho;
        potential += u.u[b] * rho;
    }
    const double variety = -fisher_information(next.grid, cfg.density_floor);
    return h * (dendro + kinetic + potential) - variety;
}

LeastActionResult least_action_step(DendrogramSequence& seq, std::vector<EventPoint>& events,
                                    const CandidateSet& candidates, const SequenceConfig& cfg) {
    if (candidates.events.empty()) throw ConfigError("least_action_step: no candidates");
    if (seq.steps.empty()) throw NumericError("least_action_step: empty sequence");

    const std::uint32_t next_id = static_cast<std::uint32_t>(events.size());
    for (const auto& c : candidates.events) {
        if (c.id < next_id) {
            throw IngestionError("least_action_step: candidate id " + std::to_string(c.id) +
                                 " does not extend the event id range");
        }
    }

    const auto& last = seq.steps.back();
    LeastActionResult result;
    result.increments.reserve(candidates.events.size());
    std::vector<SequenceStep> built;
    built.reserve(candidates.events.size());

    std::vector<EventPoint> trial = events;
    trial.emplace_back();
    for (std::size_t c = 0; c < candidates.events.size(); ++c) {
        trial.back() = candidates.events[c];
        trial.back().id = next_id;
        built.push_back(build_step(trial, cfg));
        result.increments.push_back(action_increment(last, built.back(), cfg));
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < result.increments.size(); ++c) {
        if (result.increments[c] < result.increments[best]) best = c;
    }
    result.chosen_index = best;
    result.chosen = candidates.events[best];
    result.chosen.id = next_id;

    events.push_back(result.chosen);
    seq.steps.push_back(std::move(built[best]));
    return result;
}

}  // namespace dht
