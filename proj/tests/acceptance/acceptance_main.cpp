// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.
//
// Expected values are checked against oracles that live in this file and are
// independent of the implementation paths they verify: literal nested-loop
// transcriptions, closed-form derivatives, finite-difference functional
// perturbations, a manufactured Madelung pair, and Killing-vector constants.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dht/dynamics.hpp"
#include "dht/geodesic.hpp"
#include "dht/pipeline.hpp"
#include "dht/quantum.hpp"

using namespace dht;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double elapsed_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

BranchCode random_code(CounterRng& rng, std::size_t len) {
    std::vector<std::uint8_t> d(len);
    for (auto& x : d) x = static_cast<std::uint8_t>(rng.next_below(2));
    return BranchCode(std::move(d), 2);
}

std::vector<EventPoint> random_events(CounterRng& rng, int n, int dim) {
    std::vector<EventPoint> ev(n);
    for (int i = 0; i < n; ++i) {
        ev[i].id = static_cast<std::uint32_t>(i);
        for (int d = 0; d < dim; ++d) ev[i].coords.push_back(rng.next_unit());
    }
    return ev;
}

// ---------------------------------------------------------------- criterion 1

Outcome expansion_constants_check() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [c1, c2] = expansion_constants();
    const double sec = elapsed_seconds(t0);
    const double e1 = std::abs(c1 - 1.0 / 6.0);
    const double e2 = std::abs(c2 - 1.0 / 36.0);
    return {e1 <= 1e-9 && e2 <= 1e-9 && sec < 1.0,
            "got (" + fmt(c1) + ", " + fmt(c2) + "), errors (" + fmt(e1) + ", " + fmt(e2) +
                "), " + fmt(sec) + " s"};
}

// ---------------------------------------------------------------- criterion 2

Outcome uniform_distribution_check() {
    CounterRng rng(0x2202);
    for (int n = 3; n <= 64; ++n) {
        const auto events = random_events(rng, n, 1 + static_cast<int>(rng.next_below(3)));
        const auto tree = assign_codes(
            agglomerate(pairwise_distances(events, DistanceMetric::euclidean),
                        Linkage::average));
        const auto dist = event_distribution(event_values(tree));
        if (dist.size() != static_cast<std::size_t>(n)) {
            return {false, "N=" + std::to_string(n) + ": expected " + std::to_string(n) +
                               " distinct event values"};
        }
        for (const auto& [value, mass] : dist) {
            if (mass != Rational(1, n)) {
                return {false, "N=" + std::to_string(n) + ": leaf mass differs from 1/N"};
            }
        }
    }
    return {true, "every leaf mass exactly 1/N for N in 3..64"};
}

// ---------------------------------------------------------------- criterion 3

Outcome ultrametric_laws_check() {
    const auto t0 = std::chrono::steady_clock::now();
    CounterRng rng(0x3303);
    for (int t = 0; t < 100000; ++t) {
        const std::size_t len = 2 + rng.next_below(31);  // lengths <= 32
        const auto a = random_code(rng, len);
        const auto b = random_code(rng, len);
        const auto c = random_code(rng, len);
        const auto dab = ultrametric_distance(a, b);
        const auto dbc = ultrametric_distance(b, c);
        const auto dac = ultrametric_distance(a, c);
        if (dac > std::max(dab, dbc)) return {false, "strong triangle inequality violated"};
        if (a != b && b != c && a != c) {
            Rational s0 = dab, s1 = dbc, s2 = dac;
            if (s0 > s1) std::swap(s0, s1);
            if (s1 > s2) std::swap(s1, s2);
            if (s0 > s1) std::swap(s0, s1);
            if (s1 != s2) return {false, "isosceles property violated"};
        }
        if (padic_norm(encode_edge(a) - encode_edge(b), 2) != dab ||
            padic_norm(encode_edge(b) - encode_edge(c), 2) != dbc ||
            padic_norm(encode_edge(a) - encode_edge(c), 2) != dac) {
            return {false, "padic_norm(delta edge) != ultrametric_distance"};
        }
    }
    const double sec = elapsed_seconds(t0);
    return {sec < 5.0, "1e5 triples exact, " + fmt(sec) + " s"};
}

// ---------------------------------------------------------------- criterion 4

double lit_distinctiveness(const std::vector<double>& e, std::size_t i, std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k == i || k == j) continue;
        const double vi = e[i] - e[k], vj = e[j] - e[k];
        acc += (vi - vj) * (vi - vj);
    }
    return acc / static_cast<double>(e.size());
}

Outcome views_oracle_check() {
    CounterRng rng(0x4404);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + static_cast<int>(rng.next_below(10));  // N <= 12
        EventValueList values;
        std::vector<double> e(n);
        for (int i = 0; i < n; ++i) {
            values.values.push_back(
                Rational(static_cast<long long>(rng.next_below(1ull << 40)), 1ll << 40));
            e[i] = static_cast<double>(values.values[i]);
        }
        const auto q = difference_matrix(values);

        double lit_v = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double lij = lit_distinctiveness(e, i, j);
                lit_v += lij;
                worst = std::max(worst, std::abs(distinctiveness(q, i, j) - lij));
                const double closed = (n - 2.0) / n * (e[i] - e[j]) * (e[i] - e[j]);
                worst = std::max(worst, std::abs(distinctiveness(q, i, j) - closed));
            }
        }
        lit_v /= static_cast<double>(n) * static_cast<double>(n);
        worst = std::max(worst, std::abs(variety(q, {1.0}) - lit_v));

        double lit_t = 0.0;
        for (int j = 0; j < n; ++j) {
            double row = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                row += e[j] - e[k];
                lit_t += (e[j] - e[k]) * (e[j] - e[k]);
            }
            worst = std::max(worst, std::abs(mean_momentum(q, j) - row / (n - 1)));
        }
        lit_t /= static_cast<double>(n) * static_cast<double>(n - 1);
        worst = std::max(worst, std::abs(differences_energy(q) - lit_t));
    }
    return {worst <= 1e-12, "200 datasets, max deviation " + fmt(worst)};
}

// ---------------------------------------------------------------- criterion 5

Outcome quantum_potential_check() {
    auto sweep = [](const std::function<double(double)>& rho, const GridGeometry& base,
                    const std::function<double(double)>& exact, double* orders) {
        double errs[3];
        for (int i = 0; i < 3; ++i) {
            GridGeometry geom = base;
            geom.bins = 64 << i;
            const auto grid = DensityGrid::from_function(geom, rho);
            const auto uq = quantum_potential(grid);
            double worst = 0.0;
            for (int b = 3; b < geom.bins - 3; ++b) {
                worst = std::max(worst, std::abs(uq[b] - exact(geom.center(b))));
            }
            errs[i] = worst;
        }
        orders[0] = std::log2(errs[0] / errs[1]);
        orders[1] = std::log2(errs[1] / errs[2]);
    };

    const double sigma = 0.3;
    double og[2], oc[2];
    sweep([&](double q) { return std::exp(-q * q / (2.0 * sigma * sigma)); },
          {-1.0, 1.0, 64},
          [&](double q) {
              return q * q / (4.0 * sigma * sigma * sigma * sigma) -
                     1.0 / (2.0 * sigma * sigma);
          },
          og);
    sweep([](double q) { return std::cos(q) * std::cos(q); }, {-0.6, 0.6, 64},
          [](double) { return -1.0; }, oc);

    const auto in_range = [](double o) { return o > 1.7 && o < 2.3; };
    const bool ok = in_range(og[0]) && in_range(og[1]) && in_range(oc[0]) && in_range(oc[1]);
    return {ok, "gaussian orders (" + fmt(og[0]) + ", " + fmt(og[1]) + "), cosine orders (" +
                    fmt(oc[0]) + ", " + fmt(oc[1]) + ")"};
}

// ---------------------------------------------------------------- criterion 6

Outcome variational_identity_check() {
    const GridGeometry geom{-1.0, 1.0, 128};
    const std::function<double(double)> shapes[] = {
        [](double q) { return 2.0 - q * q; },
        [](double q) { return std::exp(-q * q / (2.0 * 0.35 * 0.35)); },
    };
    double worst_rel = 0.0;
    for (const auto& shape : shapes) {
        const auto grid = DensityGrid::from_function(geom, shape);
        const auto uq = quantum_potential(grid);
        const double h = geom.h(), eps = 1e-6;
        double scale = 0.0;
        for (int b = 3; b < geom.bins - 3; ++b) scale = std::max(scale, std::abs(4.0 * uq[b]));
        for (int b = 3; b < geom.bins - 3; ++b) {
            DensityGrid up = grid, dn = grid;
            up.density[b] += eps;
            dn.density[b] -= eps;
            const double dfd =
                (fisher_information(up) - fisher_information(dn)) / (2.0 * eps * h);
            worst_rel = std::max(worst_rel, std::abs(dfd - (-4.0 * uq[b])) / scale);
        }
    }
    return {worst_rel <= 0.01,
            "max interior deviation " + fmt(100.0 * worst_rel) + "% of the -4 U^Q scale"};
}

// ---------------------------------------------------------------- criterion 7

Outcome madelung_residuals_check() {
    const double sigma = 0.35, amp = 0.05, k = 1.2;
    const double s2 = sigma * sigma;
    auto build = [&](int bins) {
        const GridGeometry geom{-1.0, 1.0, bins};
        QuantumState prev, curr;
        curr.grid = {geom, std::vector<double>(bins)};
        prev.grid = {geom, std::vector<double>(bins)};
        curr.phase = {geom, std::vector<double>(bins)};
        prev.phase = {geom, std::vector<double>(bins)};
        double mass = 0.0;
        for (int b = 0; b < bins; ++b) mass += std::exp(-std::pow(geom.center(b), 2) / (2 * s2));
        const double c = 1.0 / (mass * geom.h());
        for (int b = 0; b < bins; ++b) {
            const double q = geom.center(b);
            const double rho = c * std::exp(-q * q / (2 * s2));
            const double drho = -(q / s2) * rho;
            const double s = amp * std::sin(k * q);
            const double ds = amp * k * std::cos(k * q);
            const double d2s = -amp * k * k * std::sin(k * q);
            const double uq = q * q / (4 * s2 * s2) - 1.0 / (2 * s2);
            curr.grid.density[b] = rho;
            curr.phase.s[b] = s;
            prev.phase.s[b] = s + ds * ds + uq;        // HJ residual vanishes
            prev.grid.density[b] = rho - (drho * ds + rho * d2s);  // continuity holds
        }
        curr.psi = wavefunction(curr.grid, curr.phase).psi;
        prev.psi = wavefunction(prev.grid, prev.phase).psi;
        return std::pair{prev, curr};
    };

    double hj[3], cont[3], squared_value = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int bins = 64 << i;
        const auto [prev, curr] = build(bins);
        const auto res = bohmian_residuals(prev, curr, ExternalPotential::zero(bins));
        double worst_hj = 0.0, worst_cont = 0.0;
        for (int b = 3; b < bins - 3; ++b) {
            worst_hj = std::max(worst_hj, std::abs(res.hamilton_jacobi[b]));
            worst_cont = std::max(worst_cont, std::abs(res.continuity[b]));
        }
        hj[i] = worst_hj;
        cont[i] = worst_cont;
        if (i == 2) {
            // the squared-flux continuity variant: evaluated and reported,
            // no convergence requirement
            const auto sq = bohmian_residuals(prev, curr, ExternalPotential::zero(bins), true);
            for (int b = 3; b < bins - 3; ++b) {
                squared_value = std::max(squared_value, std::abs(sq.continuity[b]));
            }
        }
    }
    const double o_hj[2] = {std::log2(hj[0] / hj[1]), std::log2(hj[1] / hj[2])};
    const double o_cont[2] = {std::log2(cont[0] / cont[1]), std::log2(cont[1] / cont[2])};
    const auto in_range = [](double o) { return o > 1.7 && o < 2.3; };
    const bool ok = in_range(o_hj[0]) && in_range(o_hj[1]) && in_range(o_cont[0]) &&
                    in_range(o_cont[1]);
    return {ok, "HJ orders (" + fmt(o_hj[0]) + ", " + fmt(o_hj[1]) + "), continuity orders (" +
                    fmt(o_cont[0]) + ", " + fmt(o_cont[1]) +
                    "); printed squared form max residual " + fmt(squared_value)};
}

// ---------------------------------------------------------------- criterion 8

Outcome variety_continuum_oracle_check() {
    double worst = 0.0;
    for (int bins : {16, 32, 64}) {
        const GridGeometry geom{-1.0, 1.0, bins};
        const auto grid = DensityGrid::from_function(geom, [](double q) {
            return std::cos(0.5 * std::numbers::pi * q) + 0.1;
        });
        const double fast = variety_continuum(grid, -36.0);

        // literal triple-loop transcription on the same nodes
        const double h = geom.h();
        const int m_last = static_cast<int>(std::llround(1.0 / h));
        auto rho = [&](int idx) { return idx < bins ? grid.density[idx] : 0.0; };
        auto w = [](int i, int last) { return (i == 0 || i == last) ? 0.5 : 1.0; };
        double acc = 0.0;
        for (int b = 0; b < bins; ++b) {
            for (int m = 0; m <= m_last; ++m) {
                for (int n = 0; n <= m_last; ++n) {
                    const double x = m * h, y = n * h;
                    acc += w(b, bins - 1) * w(m, m_last) * w(n, m_last) * grid.density[b] *
                           (x - y) * (x - y) * rho(b + m) * rho(b + n);
                }
            }
        }
        const double literal = -36.0 * acc * h * h * h;
        worst = std::max(worst, std::abs(fast - literal));
    }
    return {worst <= 1e-10, "max |separable - literal| = " + fmt(worst) + " over B in {16,32,64}"};
}

// ---------------------------------------------------------------- criterion 9

Outcome geodesics_check() {
    std::string detail;

    // flat space: straight to 1e-12
    const auto mink = SpacetimeMetric::minkowski();
    const auto m0 = circular_orbit_state(mink, 1.0);
    const auto mtraj = integrate_geodesic(mink, m0, 0.002, 1000);
    double mink_err = 0.0;
    for (std::size_t i = 0; i < mtraj.samples.size(); ++i) {
        const double s = mtraj.affine(i);
        for (int c = 0; c < 4; ++c) {
            mink_err = std::max(mink_err,
                                std::abs(mtraj.samples[i].x[c] - (m0.x[c] + s * m0.u[c])));
            mink_err = std::max(mink_err, std::abs(mtraj.samples[i].u[c] - m0.u[c]));
        }
    }
    detail += "minkowski " + fmt(mink_err);

    // circular orbit drift over 1e4 steps
    const auto schw = SpacetimeMetric::schwarzschild(1.0);
    const auto c0 = circular_orbit_state(schw, 6.0);
    const auto orbit = integrate_geodesic(schw, c0, 0.1, 10000);
    const double e0 = orbit_energy(schw, c0), l0 = orbit_angular_momentum(c0);
    double r_drift = 0.0, e_drift = 0.0, l_drift = 0.0;
    for (const auto& st : orbit.samples) {
        r_drift = std::max(r_drift, std::abs(st.x[1] - 6.0));
        e_drift = std::max(e_drift, std::abs(orbit_energy(schw, st) - e0) / e0);
        l_drift = std::max(l_drift, std::abs(orbit_angular_momentum(st) - l0) / l0);
    }
    detail += "; drifts r " + fmt(r_drift) + ", E " + fmt(e_drift) + ", L " + fmt(l_drift);

    // measured RK4 order on an eccentric orbit vs a 10x-finer reference
    const auto s0 = eccentric_orbit_state(schw, 10.0, 0.05);
    const double total = 100.0;
    const auto ref = integrate_geodesic(schw, s0, total / 8000.0, 8000).samples.back();
    double errs[3];
    int idx = 0;
    for (double ds : {0.4, 0.2, 0.1}) {
        const auto last =
            integrate_geodesic(schw, s0, ds, static_cast<int>(total / ds)).samples.back();
        double err = 0.0;
        for (int c = 0; c < 4; ++c) {
            err = std::max(err, std::abs(last.x[c] - ref.x[c]));
            err = std::max(err, std::abs(last.u[c] - ref.u[c]));
        }
        errs[idx++] = err;
    }
    const double o1 = std::log2(errs[0] / errs[1]), o2 = std::log2(errs[1] / errs[2]);
    detail += "; RK4 orders (" + fmt(o1) + ", " + fmt(o2) + ")";

    const bool ok = mink_err <= 1e-12 && r_drift < 1e-6 && e_drift < 1e-6 && l_drift < 1e-6 &&
                    o1 > 3.5 && o1 < 4.5 && o2 > 3.5 && o2 < 4.5;
    return {ok, detail};
}

// --------------------------------------------------------------- criterion 10

Outcome determinism_scale_check() {
    PipelineConfig cfg;
    cfg.source = SourceKind::geodesic;
    cfg.geo_steps = 511;  // 512 events
    cfg.seed = 2024;

    const fs::path base = fs::path("tmp_tests") / "acceptance_512";
    fs::remove_all(base);
    fs::create_directories(base);

    double secs[2];
    for (int run = 0; run < 2; ++run) {
        cfg.out_dir = (base / ("run" + std::to_string(run))).string();
        const auto t0 = std::chrono::steady_clock::now();
        run_pipeline(cfg);
        secs[run] = elapsed_seconds(t0);
    }

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool identical = true;
    std::string differing;
    for (const char* f :
         {"report.json", "codes.csv", "pdf.csv", "grid.csv", "events.csv", "trajectory.csv",
          "plots/rho.svg", "plots/phase.svg", "plots/quantum_potential.svg",
          "plots/residuals.svg"}) {
        auto a = slurp(base / "run0" / f), b = slurp(base / "run1" / f);
        if (std::string(f) == "report.json") {
            // out_dir differs by construction; it is config echo, not output
            const std::string k0 = "\"out_dir\": \"" + (base / "run0").string() + "\"";
            const std::string k1 = "\"out_dir\": \"" + (base / "run1").string() + "\"";
            const auto p0 = a.find(k0);
            const auto p1 = b.find(k1);
            if (p0 != std::string::npos) a.replace(p0, k0.size(), "\"out_dir\": \"\"");
            if (p1 != std::string::npos) b.replace(p1, k1.size(), "\"out_dir\": \"\"");
        }
        if (a.empty() || a != b) {
            identical = false;
            differing = f;
        }
    }
    const bool ok = identical && secs[0] < 10.0 && secs[1] < 10.0;
    return {ok, identical ? "N=512 byte-identical, runs " + fmt(secs[0]) + " s / " +
                                fmt(secs[1]) + " s"
                          : "outputs differ in " + differing};
}

// --------------------------------------------------------------- criterion 11

Outcome least_action_check() {
    CounterRng rng(0xbb11);
    SequenceConfig cfg;
    cfg.geom = {-1.0, 1.0, 32};

    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(29));  // N <= 32
        const int n_cand = 1 + static_cast<int>(rng.next_below(8));
        auto events = random_events(rng, n, 2);
        CandidateSet set;
        for (int c = 0; c < n_cand; ++c) {
            EventPoint e;
            e.id = static_cast<std::uint32_t>(n);
            e.coords = {rng.next_unit() * 3.0, rng.next_unit() * 3.0};
            set.events.push_back(e);
        }
        if (trial % 5 == 0 && n_cand >= 2) set.events[1] = set.events[0];  // forced tie

        auto seq = grow_sequence(events, n, cfg);
        auto ev_copy = events;
        const auto result = least_action_step(seq, ev_copy, set, cfg);

        // brute-force oracle: rebuild each branch through the public module
        // operations and assemble the increment with local stencil code
        const auto prev = build_step(events, cfg);
        std::size_t best = 0;
        double best_inc = 0.0;
        for (std::size_t c = 0; c < set.events.size(); ++c) {
            auto trial_events = events;
            trial_events.push_back({static_cast<std::uint32_t>(n), set.events[c].coords});
            const auto dm = pairwise_distances(trial_events, cfg.metric);
            const auto tree = assign_codes(agglomerate(dm, cfg.linkage));
            const auto q = difference_matrix(event_values(tree));
            const auto grid =
                to_grid(difference_pdf(q, cfg.tol), cfg.geom.bins, cfg.geom.lo, cfg.geom.hi);
            const auto phase = phase_field(grid);

            const double h = cfg.geom.h();
            const int bins = cfg.geom.bins;
            double dendro = 0.0, kinetic = 0.0;
            for (int b = 0; b < bins; ++b) {
                double ds;
                if (b == 0) {
                    ds = (-3.0 * phase.s[0] + 4.0 * phase.s[1] - phase.s[2]) / (2.0 * h);
                } else if (b == bins - 1) {
                    ds = (3.0 * phase.s[b] - 4.0 * phase.s[b - 1] + phase.s[b - 2]) / (2.0 * h);
                } else {
                    ds = (phase.s[b + 1] - phase.s[b - 1]) / (2.0 * h);
                }
                dendro += (phase.s[b] - prev.phase.s[b]) * grid.density[b] * h;
                kinetic += ds * ds * grid.density[b] * h;
            }
            double fisher = 0.0;
            for (int b = 0; b < bins; ++b) {
                double dr;
                if (b == 0) {
                    dr = (-3.0 * grid.density[0] + 4.0 * grid.density[1] - grid.density[2]) /
                         (2.0 * h);
                } else if (b == bins - 1) {
                    dr = (3.0 * grid.density[b] - 4.0 * grid.density[b - 1] +
                          grid.density[b - 2]) /
                         (2.0 * h);
                } else {
                    dr = (grid.density[b + 1] - grid.density[b - 1]) / (2.0 * h);
                }
                if (grid.density[b] > cfg.density_floor) {
                    fisher += dr * dr / grid.density[b] * h;
                }
            }
            const double inc = dendro + kinetic - (-fisher);  // U = 0 mode
            if (c == 0 || inc < best_inc) {
                best = c;
                best_inc = inc;
            }
        }
        if (result.chosen_index != best) {
            return {false, "trial " + std::to_string(trial) + ": chose " +
                               std::to_string(result.chosen_index) + ", oracle argmin " +
                               std::to_string(best)};
        }
    }
    return {true, "50 candidate sets match the brute-force argmin (ties to lowest index)"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "expansion-constants", expansion_constants_check},
        {2, "uniform-event-distribution", uniform_distribution_check},
        {3, "ultrametric-laws", ultrametric_laws_check},
        {4, "views-oracle-equivalence", views_oracle_check},
        {5, "quantum-potential-analytics", quantum_potential_check},
        {6, "variational-identity", variational_identity_check},
        {7, "madelung-residuals", madelung_residuals_check},
        {8, "variety-continuum-oracle", variety_continuum_oracle_check},
        {9, "geodesics", geodesics_check},
        {10, "determinism-and-scale", determinism_scale_check},
        {11, "least-action-dynamics", least_action_check},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("%s  criterion %2d %-28s %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                    c.name, outcome.detail.c_str());
    }
    std::printf("%d/11 acceptance criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
