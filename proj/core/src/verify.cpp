#include "dht/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dht/dynamics.hpp"
#include "dht/geodesic.hpp"
#include "dht/pipeline.hpp"
#include "dht/quantum.hpp"
#include "report_internal.hpp"

namespace dht {

using detail::format_double;

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["all_pass"] = all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
    std::string out;
    for (const auto& c : checks) {
        out += (c.pass ? "PASS " : "FAIL ") + c.name + "  " + c.detail + "\n";
    }
    out += all_pass() ? "verification: all checks passed\n" : "verification: FAILURES present\n";
    return out;
}

double gaussian_uq_max_interior_error(const std::vector<double>& uq, const GridGeometry& geom,
                                      double sigma, int skip_boundary) {
    double worst = 0.0;
    for (int b = skip_boundary; b < geom.bins - skip_boundary; ++b) {
        const double qc = geom.center(b);
        const double exact =
            qc * qc / (4.0 * sigma * sigma * sigma * sigma) - 1.0 / (2.0 * sigma * sigma);
        worst = std::max(worst, std::abs(uq[b] - exact));
    }
    return worst;
}

namespace {

std::string fmt2(double a, double b) {
    return format_double(a) + ", " + format_double(b);
}

BranchCode random_code(CounterRng& rng, std::size_t length) {
    std::vector<std::uint8_t> digits(length);
    for (auto& d : digits) d = static_cast<std::uint8_t>(rng.next_below(2));
    return BranchCode(std::move(digits), 2);
}

std::vector<EventPoint> random_events(CounterRng& rng, int n, int dim) {
    std::vector<EventPoint> ev(n);
    for (int i = 0; i < n; ++i) {
        ev[i].id = static_cast<std::uint32_t>(i);
        ev[i].coords.resize(dim);
        for (int d = 0; d < dim; ++d) ev[i].coords[d] = rng.next_unit();
    }
    return ev;
}

// ------------------------------------------------------------------
// literal transcriptions used as in-process oracles

double literal_distinctiveness(const std::vector<double>& e, std::size_t i, std::size_t j) {
    const std::size_t n = e.size();
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double vi = e[i] - e[k];
        const double vj = e[j] - e[k];
        acc += (vi - vj) * (vi - vj);
    }
    return acc / static_cast<double>(n);
}

double literal_variety(const std::vector<double>& e, double a) {
    const std::size_t n = e.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) acc += literal_distinctiveness(e, i, j);
        }
    }
    return a / (static_cast<double>(n) * static_cast<double>(n)) * acc;
}

double literal_mean_momentum(const std::vector<double>& e, std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k != j) acc += e[j] - e[k];
    }
    return acc / static_cast<double>(e.size() - 1);
}

double literal_differences_energy(const std::vector<double>& e) {
    const std::size_t n = e.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j != k) acc += (e[j] - e[k]) * (e[j] - e[k]);
        }
    }
    return acc / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double literal_variety_continuum(const DensityGrid& grid, double z_v) {
    const int bins = grid.geom.bins;
    const double h = grid.geom.h();
    const int m_last = static_cast<int>(std::llround(1.0 / h));
    auto rho_at = [&](int idx) { return idx < bins ? grid.density[idx] : 0.0; };
    auto wt = [](int i, int last) { return (i == 0 || i == last) ? 0.5 : 1.0; };
    double acc = 0.0;
    for (int b = 0; b < bins; ++b) {
        double inner = 0.0;
        for (int m = 0; m <= m_last; ++m) {
            for (int n = 0; n <= m_last; ++n) {
                const double x = m * h, y = n * h;
                inner += wt(m, m_last) * wt(n, m_last) * (x - y) * (x - y) * rho_at(b + m) *
                         rho_at(b + n);
            }
        }
        acc += wt(b, bins - 1) * grid.density[b] * inner;
    }
    return z_v * acc * h * h * h;
}

// ------------------------------------------------------------------
// manufactured Madelung pair: residuals of Eqs 22-23 vanish analytically

struct Manufactured {
    QuantumState prev;
    QuantumState curr;
};

Manufactured manufactured_pair(int bins) {
    const GridGeometry geom{-1.0, 1.0, bins};
    const double sigma = 0.35, amp = 0.05, k = 1.2;
    const double s2 = sigma * sigma;

    auto rho_raw = [&](double q) { return std::exp(-q * q / (2.0 * s2)); };
    auto s_curr = [&](double q) { return amp * std::sin(k * q); };
    auto ds_curr = [&](double q) { return amp * k * std::cos(k * q); };
    auto d2s_curr = [&](double q) { return -amp * k * k * std::sin(k * q); };
    auto uq_exact = [&](double q) { return q * q / (4.0 * s2 * s2) - 1.0 / (2.0 * s2); };

    // discrete normalization; every manufactured identity is linear in rho
    double mass = 0.0;
    for (int b = 0; b < bins; ++b) mass += rho_raw(geom.center(b));
    const double c = 1.0 / (mass * geom.h());

    Manufactured m;
    m.curr.grid = {geom, std::vector<double>(bins)};
    m.prev.grid = {geom, std::vector<double>(bins)};
    m.curr.phase = {geom, std::vector<double>(bins)};
    m.prev.phase = {geom, std::vector<double>(bins)};
    for (int b = 0; b < bins; ++b) {
        const double q = geom.center(b);
        const double rho = c * rho_raw(q);
        const double drho = -(q / s2) * rho;
        m.curr.grid.density[b] = rho;
        m.curr.phase.s[b] = s_curr(q);
        // S_prev = S + (dS)^2 + U^Q so the Hamilton-Jacobi residual vanishes
        m.prev.phase.s[b] = s_curr(q) + ds_curr(q) * ds_curr(q) + uq_exact(q);
        // rho_prev = rho - d(rho dS) so the continuity residual vanishes
        m.prev.grid.density[b] = rho - (drho * ds_curr(q) + rho * d2s_curr(q));
    }
    m.curr.psi = wavefunction(m.curr.grid, m.curr.phase).psi;
    m.prev.psi = wavefunction(m.prev.grid, m.prev.phase).psi;
    return m;
}

double interior_max_abs(const std::vector<double>& v, int skip) {
    double worst = 0.0;
    for (std::size_t b = skip; b + skip < v.size(); ++b) {
        worst = std::max(worst, std::abs(v[b]));
    }
    return worst;
}

}  // namespace

VerifyReport run_verification() {
    VerifyReport report;
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    {  // expansion constants by nested quadrature
        const auto [c1, c2] = expansion_constants();
        const double e1 = std::abs(c1 - 1.0 / 6.0), e2 = std::abs(c2 - 1.0 / 36.0);
        add("expansion_constants", e1 <= 1e-9 && e2 <= 1e-9, "constants " + fmt2(c1, c2));
    }

    {  // ultrametric laws on random code triples
        CounterRng rng(0x1db7);
        bool ok = true;
        std::string why = "20000 triples, lengths <= 32";
        for (int t = 0; t < 20000 && ok; ++t) {
            const std::size_t len = 2 + rng.next_below(31);
            const auto a = random_code(rng, len);
            const auto b = random_code(rng, len);
            const auto c = random_code(rng, len);
            const auto dab = ultrametric_distance(a, b);
            const auto dbc = ultrametric_distance(b, c);
            const auto dac = ultrametric_distance(a, c);
            if (dac > std::max(dab, dbc)) {
                ok = false;
                why = "strong triangle inequality violated";
            }
            if (a != b && b != c && a != c) {
                Rational s[3] = {dab, dbc, dac};
                std::sort(s, s + 3);
                if (s[1] != s[2]) {
                    ok = false;
                    why = "isosceles property violated";
                }
            }
            if (padic_norm(encode_edge(a) - encode_edge(b), 2) != dab) {
                ok = false;
                why = "norm/prefix consistency violated";
            }
        }
        add("ultrametric_laws", ok, why);
    }

    {  // event-level distribution: every leaf mass exactly 1/N
        CounterRng rng(0x51ab);
        bool ok = true;
        for (int n : {3, 8, 16}) {
            const auto ev = random_events(rng, n, 2);
            const auto tree = assign_codes(agglomerate(
                pairwise_distances(ev, DistanceMetric::euclidean), Linkage::average));
            const auto dist = event_distribution(event_values(tree));
            if (dist.size() != static_cast<std::size_t>(n)) ok = false;
            for (const auto& [value, mass] : dist) {
                if (mass != Rational(1, n)) ok = false;
            }
        }
        add("uniform_event_distribution", ok, "N in {3,8,16}, masses exactly 1/N");
    }

    {  // optimized view statistics vs literal nested loops
        CounterRng rng(0xab31);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const int n = 3 + static_cast<int>(rng.next_below(8));
            std::vector<double> e(n);
            for (auto& x : e) x = rng.next_unit();
            EventValueList values;
            for (double x : e) {
                values.values.push_back(Rational(static_cast<long long>(x * (1ll << 40)),
                                                 1ll << 40));
            }
            std::vector<double> ed(n);
            for (int i = 0; i < n; ++i) ed[i] = static_cast<double>(values.values[i]);
            const auto q = difference_matrix(values);
            worst = std::max(worst, std::abs(variety(q, {1.0}) - literal_variety(ed, 1.0)));
            worst = std::max(worst, std::abs(differences_energy(q) -
                                             literal_differences_energy(ed)));
            for (int j = 0; j < n; ++j) {
                worst = std::max(worst, std::abs(mean_momentum(q, j) -
                                                 literal_mean_momentum(ed, j)));
            }
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (i != j) {
                        worst = std::max(worst, std::abs(distinctiveness(q, i, j) -
                                                         literal_distinctiveness(ed, i, j)));
                    }
                }
            }
        }
        add("views_oracle_equivalence", worst <= 1e-12, "max deviation " + format_double(worst));
    }

    {  // Gaussian quantum potential vs closed form
        const double sigma = 0.25;
        const GridGeometry geom{-1.0, 1.0, 128};
        const auto grid = DensityGrid::from_function(
            geom, [&](double q) { return std::exp(-q * q / (2.0 * sigma * sigma)); });
        const auto uq = quantum_potential(grid);
        const double err = gaussian_uq_max_interior_error(uq, geom, sigma);
        const double scale = 1.0 / (4.0 * sigma * sigma * sigma * sigma);
        add("quantum_potential_gaussian", err <= 0.01 * scale,
            "max interior error " + format_double(err));
    }

    {  // cosine amplitude: U^Q = -1
        const GridGeometry geom{-0.6, 0.6, 128};
        const auto grid = DensityGrid::from_function(
            geom, [](double q) { return std::cos(q) * std::cos(q); });
        const auto uq = quantum_potential(grid);
        double worst = 0.0;
        for (int b = 3; b < geom.bins - 3; ++b) worst = std::max(worst, std::abs(uq[b] + 1.0));
        add("quantum_potential_cosine", worst <= 1e-3, "max |U^Q + 1| " + format_double(worst));
    }

    {  // separable shift integral vs literal triple loop
        const GridGeometry geom{-1.0, 1.0, 32};
        const auto grid = DensityGrid::from_function(
            geom, [](double q) { return std::cos(0.5 * std::numbers::pi * q); });
        const double a = variety_continuum(grid, -36.0);
        const double b = literal_variety_continuum(grid, -36.0);
        add("variety_continuum_oracle", std::abs(a - b) <= 1e-10, fmt2(a, b));
    }

    {  // manufactured Madelung pair: O(h^2) residual convergence
        double hj[3], cont[3];
        int idx = 0;
        for (int bins : {64, 128, 256}) {
            const auto m = manufactured_pair(bins);
            const auto res = bohmian_residuals(m.prev, m.curr,
                                               ExternalPotential::zero(bins));
            hj[idx] = interior_max_abs(res.hamilton_jacobi, 3);
            cont[idx] = interior_max_abs(res.continuity, 3);
            ++idx;
        }
        const double ohj1 = std::log2(hj[0] / hj[1]), ohj2 = std::log2(hj[1] / hj[2]);
        const double oc1 = std::log2(cont[0] / cont[1]), oc2 = std::log2(cont[1] / cont[2]);
        const bool ok = ohj1 > 1.7 && ohj1 < 2.3 && ohj2 > 1.7 && ohj2 < 2.3 && oc1 > 1.7 &&
                        oc1 < 2.3 && oc2 > 1.7 && oc2 < 2.3;
        add("madelung_manufactured_orders", ok,
            "HJ orders " + fmt2(ohj1, ohj2) + "; continuity orders " + fmt2(oc1, oc2));
    }

    {  // finite perturbation of the Fisher term vs -4 U^Q
        bool ok = true;
        std::string detail;
        const GridGeometry geom{-1.0, 1.0, 128};
        const auto densities = {
            DensityGrid::from_function(geom, [](double q) { return 2.0 - q * q; }),
            DensityGrid::from_function(geom,
                                       [](double q) { return std::exp(-q * q / 0.245); }),
        };
        for (const auto& grid : densities) {
            const auto uq = quantum_potential(grid);
            const double h = geom.h();
            const double eps = 1e-6;
            double scale = 0.0, worst = 0.0;
            for (int b = 3; b < geom.bins - 3; ++b) {
                scale = std::max(scale, std::abs(4.0 * uq[b]));
            }
            for (int b = 3; b < geom.bins - 3; ++b) {
                DensityGrid up = grid, dn = grid;
                up.density[b] += eps;
                dn.density[b] -= eps;
                const double dfd = (fisher_information(up) - fisher_information(dn)) /
                                   (2.0 * eps * h);
                worst = std::max(worst, std::abs(dfd - (-4.0 * uq[b])));
            }
            if (worst > 0.01 * scale) ok = false;
            detail += format_double(worst / scale) + " ";
        }
        add("variational_identity", ok, "relative deviations " + detail);
    }

    {  // flat-space trajectories are straight lines
        const auto metric = SpacetimeMetric::minkowski();
        const auto s0 = circular_orbit_state(metric, 1.0);
        const auto traj = integrate_geodesic(metric, s0, 0.002, 1000);
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.samples.size(); ++i) {
            const double s = traj.affine(i);
            for (int c = 0; c < 4; ++c) {
                worst = std::max(worst,
                                 std::abs(traj.samples[i].x[c] - (s0.x[c] + s * s0.u[c])));
                worst = std::max(worst, std::abs(traj.samples[i].u[c] - s0.u[c]));
            }
        }
        add("geodesic_minkowski", worst <= 1e-12, "max deviation " + format_double(worst));
    }

    {  // circular orbit conservation over 1e4 RK4 steps
        const auto metric = SpacetimeMetric::schwarzschild(1.0);
        const auto s0 = circular_orbit_state(metric, 6.0);
        const auto traj = integrate_geodesic(metric, s0, 0.1, 10000);
        const double e0 = orbit_energy(metric, s0), l0 = orbit_angular_momentum(s0);
        double r_drift = 0.0, e_drift = 0.0, l_drift = 0.0;
        for (const auto& st : traj.samples) {
            r_drift = std::max(r_drift, std::abs(st.x[1] - 6.0));
            e_drift = std::max(e_drift, std::abs(orbit_energy(metric, st) - e0) / e0);
            l_drift = std::max(l_drift, std::abs(orbit_angular_momentum(st) - l0) / l0);
        }
        add("geodesic_circular_orbit",
            r_drift < 1e-6 && e_drift < 1e-6 && l_drift < 1e-6,
            "r drift " + format_double(r_drift) + ", E/L drifts " + fmt2(e_drift, l_drift));
    }

    {  // RK4 measured order on an eccentric orbit against a fine reference
        // (the circular orbit is a fixed point of the discrete map, so it
        // carries no measurable truncation error)
        const auto metric = SpacetimeMetric::schwarzschild(1.0);
        const auto s0 = eccentric_orbit_state(metric, 10.0, 0.05);
        const double total = 100.0;
        const auto ref = integrate_geodesic(metric, s0, total / 8000.0, 8000).samples.back();
        double errs[3];
        int idx = 0;
        for (double ds : {0.4, 0.2, 0.1}) {
            const int steps = static_cast<int>(std::llround(total / ds));
            const auto last = integrate_geodesic(metric, s0, ds, steps).samples.back();
            double err = 0.0;
            for (int c = 0; c < 4; ++c) {
                err = std::max(err, std::abs(last.x[c] - ref.x[c]));
                err = std::max(err, std::abs(last.u[c] - ref.u[c]));
            }
            errs[idx++] = err;
        }
        const double o1 = std::log2(errs[0] / errs[1]), o2 = std::log2(errs[1] / errs[2]);
        add("geodesic_rk4_order", o1 > 3.5 && o1 < 4.5 && o2 > 3.5 && o2 < 4.5,
            "orders " + fmt2(o1, o2));
    }

    {  // end-to-end determinism on a synthetic run
        PipelineConfig cfg;
        cfg.source = SourceKind::synthetic;
        cfg.synthetic_n = 12;
        cfg.seed = 7;
        const auto a = run_pipeline(cfg);
        const auto b = run_pipeline(cfg);
        add("pipeline_determinism", a.json == b.json,
            a.json == b.json ? "reports byte-identical" : "reports differ");
    }

    return report;
}

}  // namespace dht
