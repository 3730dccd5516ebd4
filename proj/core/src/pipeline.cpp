#include "dht/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "report_internal.hpp"

namespace dht {

using nlohmann::json;
using detail::format_double;

SourceKind parse_source(const std::string& s) {
    if (s == "csv") return SourceKind::csv;
    if (s == "geodesic") return SourceKind::geodesic;
    if (s == "synthetic") return SourceKind::synthetic;
    throw ConfigError("unknown source '" + s + "' (expected csv|geodesic|synthetic)");
}

std::string to_string(SourceKind k) {
    switch (k) {
        case SourceKind::csv: return "csv";
        case SourceKind::geodesic: return "geodesic";
        case SourceKind::synthetic: return "synthetic";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse real value '" + value + "'");
    }
}

long long parse_integer(const std::string& key, const std::string& value) {
    long long v = 0;
    const auto* begin = value.data();
    const auto* end = begin + value.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end) {
        throw ConfigError("key '" + key + "': cannot parse integer value '" + value + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw ConfigError("key '" + key + "': cannot parse boolean value '" + value + "'");
}

}  // namespace

PipelineConfig PipelineConfig::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    PipelineConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        }
        cfg.apply(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

void PipelineConfig::apply(const std::string& key, const std::string& value) {
    if (key == "source") source = parse_source(value);
    else if (key == "input") input = value;
    else if (key == "out_dir") out_dir = value;
    else if (key == "metric") metric = value;
    else if (key == "linkage") linkage = value;
    else if (key == "bins") bins = static_cast<int>(parse_integer(key, value));
    else if (key == "grid_lo") grid_lo = parse_real(key, value);
    else if (key == "grid_hi") grid_hi = parse_real(key, value);
    else if (key == "tol") tol = parse_real(key, value);
    else if (key == "a") a = parse_real(key, value);
    else if (key == "zv_mode") zv_mode = value;
    else if (key == "zv_value") zv_value = parse_real(key, value);
    else if (key == "u_mode") u_mode = value;
    else if (key == "density_floor") density_floor = parse_real(key, value);
    else if (key == "continuity_squared") continuity_squared = parse_bool(key, value);
    else if (key == "uq_bohmian_sign") uq_bohmian_sign = parse_bool(key, value);
    else if (key == "abs_differences") abs_differences = parse_bool(key, value);
    else if (key == "projection") projection = value;
    else if (key == "seed") seed = static_cast<std::uint64_t>(parse_integer(key, value));
    else if (key == "synthetic_n") synthetic_n = static_cast<int>(parse_integer(key, value));
    else if (key == "synthetic_dim") synthetic_dim = static_cast<int>(parse_integer(key, value));
    else if (key == "geo_metric") geo_metric = value;
    else if (key == "geo_mass") geo_mass = parse_real(key, value);
    else if (key == "geo_r0") geo_r0 = parse_real(key, value);
    else if (key == "geo_ds") geo_ds = parse_real(key, value);
    else if (key == "geo_steps") geo_steps = static_cast<int>(parse_integer(key, value));
    else if (key == "stride") stride = static_cast<int>(parse_integer(key, value));
    else if (key == "start") start = static_cast<int>(parse_integer(key, value));
    else if (key == "candidates") candidates = value;
    else if (key == "la_steps") la_steps = static_cast<int>(parse_integer(key, value));
    else throw ConfigError("unknown config key '" + key + "'");
}

void PipelineConfig::validate() const {
    parse_distance_metric(metric);
    parse_linkage(linkage);
    parse_u_mode(u_mode);
    parse_projection(projection);
    if (zv_mode != "auto" && zv_mode != "fixed") {
        throw ConfigError("zv_mode must be auto|fixed, got '" + zv_mode + "'");
    }
    if (bins < 8) throw ConfigError("bins must be >= 8, got " + std::to_string(bins));
    if (!(grid_lo < grid_hi)) throw ConfigError("grid bounds must satisfy grid_lo < grid_hi");
    if (tol < 0.0) throw ConfigError("tol must be >= 0");
    if (a <= 0.0) throw ConfigError("a must be > 0");
    if (density_floor <= 0.0) throw ConfigError("density_floor must be > 0");
    if (source == SourceKind::csv && input.empty()) {
        throw ConfigError("csv source requires input=<events.csv>");
    }
    if (source == SourceKind::synthetic) {
        if (synthetic_n < 3) throw ConfigError("synthetic_n must be >= 3");
        if (synthetic_dim < 1) throw ConfigError("synthetic_dim must be >= 1");
    }
    if (source == SourceKind::geodesic) {
        parse_spacetime(geo_metric);
        if (geo_mass <= 0.0) throw ConfigError("geo_mass must be > 0");
        if (geo_ds <= 0.0) throw ConfigError("geo_ds must be > 0");
        if (geo_steps < 2) throw ConfigError("geo_steps must be >= 2");
        if (stride < 1) throw ConfigError("stride must be >= 1");
        if (geo_metric == "schwarzschild" && geo_r0 <= 3.0) {
            throw ConfigError("geo_r0 must exceed 3 (units of M) for schwarzschild orbits");
        }
    }
    if (start < 3) throw ConfigError("start must be >= 3");
}

SequenceConfig PipelineConfig::sequence_config() const {
    return {distance_metric(), linkage_spec(), grid(),       tol,
            density_floor,     abs_differences, u_mode_spec()};
}

std::vector<EventPoint> read_events_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestionError("cannot open events file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw IngestionError("empty events file '" + path + "'");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> header;
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
    if (header.empty() || header[0] != "id") {
        throw IngestionError("events header must start with 'id'");
    }
    for (std::size_t c = 1; c < header.size(); ++c) {
        if (header[c] != "c" + std::to_string(c - 1)) {
            throw IngestionError("events header column " + std::to_string(c) +
                                 " must be 'c" + std::to_string(c - 1) + "'");
        }
    }
    const std::size_t dim = header.size() - 1;
    if (dim == 0) throw IngestionError("events file has no coordinate columns");

    std::vector<EventPoint> events;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != dim + 1) {
            throw IngestionError("line " + std::to_string(lineno) + ": expected " +
                                 std::to_string(dim + 1) + " cells");
        }
        EventPoint e;
        long long id = 0;
        const auto* b = cells[0].data();
        auto [p, ec] = std::from_chars(b, b + cells[0].size(), id);
        if (ec != std::errc() || p != b + cells[0].size() || id < 0) {
            throw IngestionError("line " + std::to_string(lineno) + ": bad id '" + cells[0] + "'");
        }
        e.id = static_cast<std::uint32_t>(id);
        for (std::size_t c = 1; c < cells.size(); ++c) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(cells[c], &pos);
                if (pos != cells[c].size()) throw std::invalid_argument("trailing characters");
                e.coords.push_back(v);
            } catch (const std::exception&) {
                throw IngestionError("line " + std::to_string(lineno) + ": bad coordinate '" +
                                     cells[c] + "'");
            }
        }
        events.push_back(std::move(e));
    }
    validate_events(events);
    return events;
}

void write_events_csv(const std::string& path, const std::vector<EventPoint>& events) {
    std::string out = "id";
    const std::size_t dim = events.empty() ? 0 : events.front().coords.size();
    for (std::size_t d = 0; d < dim; ++d) out += ",c" + std::to_string(d);
    out += "\n";
    for (const auto& e : events) {
        out += std::to_string(e.id);
        for (double c : e.coords) out += "," + format_double(c);
        out += "\n";
    }
    detail::write_text_file(path, out);
}

void write_trajectory_csv(const std::string& path, const GeodesicTrajectory& traj) {
    const bool schw = traj.metric.kind == SpacetimeMetric::Kind::schwarzschild;
    std::string out = schw ? "s,t,r,theta,phi,u0,u1,u2,u3\n" : "s,t,x,y,z,u0,u1,u2,u3\n";
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const auto& st = traj.samples[i];
        out += format_double(traj.affine(i));
        for (double v : st.x) out += "," + format_double(v);
        for (double v : st.u) out += "," + format_double(v);
        out += "\n";
    }
    detail::write_text_file(path, out);
}

std::vector<EventPoint> load_events(const PipelineConfig& cfg, GeodesicTrajectory* traj_out) {
    switch (cfg.source) {
        case SourceKind::csv:
            return read_events_csv(cfg.input);
        case SourceKind::synthetic: {
            CounterRng rng(cfg.seed);
            std::vector<EventPoint> events(cfg.synthetic_n);
            for (int i = 0; i < cfg.synthetic_n; ++i) {
                events[i].id = static_cast<std::uint32_t>(i);
                events[i].coords.resize(cfg.synthetic_dim);
                for (int d = 0; d < cfg.synthetic_dim; ++d) {
                    events[i].coords[d] = rng.next_unit();
                }
            }
            return events;
        }
        case SourceKind::geodesic: {
            const auto kind = parse_spacetime(cfg.geo_metric);
            const SpacetimeMetric metric = kind == SpacetimeMetric::Kind::schwarzschild
                                               ? SpacetimeMetric::schwarzschild(cfg.geo_mass)
                                               : SpacetimeMetric::minkowski();
            const double r0 = kind == SpacetimeMetric::Kind::schwarzschild
                                  ? cfg.geo_r0 * cfg.geo_mass
                                  : cfg.geo_r0;
            const auto initial = circular_orbit_state(metric, r0);
            auto traj = integrate_geodesic(metric, initial, cfg.geo_ds, cfg.geo_steps);
            auto events = sample_events(traj, cfg.stride, cfg.projection_spec());
            if (traj_out) *traj_out = std::move(traj);
            return events;
        }
    }
    throw ConfigError("unhandled source");
}

namespace {

json config_echo(const PipelineConfig& cfg) {
    json j;
    j["source"] = to_string(cfg.source);
    j["input"] = cfg.input;
    j["out_dir"] = cfg.out_dir;
    j["metric"] = cfg.metric;
    j["linkage"] = cfg.linkage;
    j["bins"] = cfg.bins;
    j["grid_lo"] = cfg.grid_lo;
    j["grid_hi"] = cfg.grid_hi;
    j["tol"] = cfg.tol;
    j["a"] = cfg.a;
    j["zv_mode"] = cfg.zv_mode;
    j["zv_value"] = cfg.zv_value;
    j["u_mode"] = cfg.u_mode;
    j["density_floor"] = cfg.density_floor;
    j["continuity_squared"] = cfg.continuity_squared;
    j["uq_bohmian_sign"] = cfg.uq_bohmian_sign;
    j["abs_differences"] = cfg.abs_differences;
    j["projection"] = cfg.projection;
    j["seed"] = cfg.seed;
    j["synthetic_n"] = cfg.synthetic_n;
    j["synthetic_dim"] = cfg.synthetic_dim;
    j["geo_metric"] = cfg.geo_metric;
    j["geo_mass"] = cfg.geo_mass;
    j["geo_r0"] = cfg.geo_r0;
    j["geo_ds"] = cfg.geo_ds;
    j["geo_steps"] = cfg.geo_steps;
    j["stride"] = cfg.stride;
    j["start"] = cfg.start;
    j["candidates"] = cfg.candidates;
    j["la_steps"] = cfg.la_steps;
    return j;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

RunReport run_pipeline(const PipelineConfig& cfg) {
    cfg.validate();

    GeodesicTrajectory traj;
    const auto events = load_events(cfg, &traj);
    if (events.size() < 3) {
        throw IngestionError("pipeline needs at least 3 events, got " +
                             std::to_string(events.size()));
    }

    const auto dm = pairwise_distances(events, cfg.distance_metric());
    const auto tree = assign_codes(agglomerate(dm, cfg.linkage_spec()));
    const auto values = event_values(tree);
    const auto distribution = event_distribution(values);

    bool uniform = distribution.size() == values.size();
    const Rational expected_mass(1, static_cast<long>(values.size()));
    for (const auto& [value, mass] : distribution) {
        if (mass != expected_mass) uniform = false;
    }

    const auto q = difference_matrix(values);
    const double v_discrete = variety(q, {cfg.a});
    const double t_discrete = differences_energy(q);
    double momentum_abs_max = 0.0, momentum_weighted_sum = 0.0;
    for (std::size_t j = 0; j < q.n; ++j) {
        const double pj = mean_momentum(q, j);
        momentum_abs_max = std::max(momentum_abs_max, std::abs(pj));
        momentum_weighted_sum += static_cast<double>(q.n - 1) * pj;
    }

    const auto pdf = difference_pdf(q, cfg.tol, cfg.abs_differences);
    const auto grid = to_grid(pdf, cfg.bins, cfg.grid_lo, cfg.grid_hi);
    const auto phase = phase_field(grid);
    const auto state = wavefunction(grid, phase);
    const auto u = make_potential(grid, cfg.u_mode_spec());
    const auto uq = quantum_potential(grid, cfg.density_floor, cfg.uq_bohmian_sign);
    const auto residuals = bohmian_residuals(state, state, u, cfg.continuity_squared,
                                             cfg.density_floor);
    const double kinetic = kinetic_energy_continuum(grid, phase);
    const auto expansion = variety_expansion_terms(grid, cfg.density_floor);
    const auto constants = expansion_constants();

    double zv = cfg.zv_value;
    if (cfg.zv_mode == "auto") {
        double sum = 0.0;
        int cells = 0;
        for (double d : grid.density) {
            if (d > cfg.density_floor) {
                sum += d;
                ++cells;
            }
        }
        const double mean = cells ? sum / cells : 0.0;
        zv = cells ? -36.0 / (mean * mean) : 0.0;
    }
    const double v_continuum = variety_continuum(grid, zv);

    const auto ham = hamiltonian_density(grid, phase, u, cfg.density_floor);
    int ham_gaps = 0;
    double ham_sum = 0.0;
    for (double hcell : ham) {
        if (std::isnan(hcell)) ++ham_gaps;
        else ham_sum += hcell * grid.geom.h();
    }

    const QuantumState states[] = {state};
    const auto action = action_evaluate(states, u, cfg.density_floor);

    double hj_max = 0.0, cont_max = 0.0;
    for (int b = 0; b < cfg.bins; ++b) {
        hj_max = std::max(hj_max, std::abs(residuals.hamilton_jacobi[b]));
        cont_max = std::max(cont_max, std::abs(residuals.continuity[b]));
    }

    json rep;
    rep["schema"] = report_schema_version();
    rep["config"] = config_echo(cfg);
    rep["dataset"] = {
        {"source", to_string(cfg.source)},
        {"n", events.size()},
        {"dim", events.front().coords.size()},
        {"seed", cfg.seed},
    };
    rep["codes"] = {
        {"n", tree.codes.size()},
        {"length", tree.codes.front().length()},
        {"uniform_event_mass", uniform},
        {"event_mass", rational_str(expected_mass)},
    };
    rep["views"] = {
        {"variety", v_discrete},
        {"differences_energy", t_discrete},
        {"momentum_abs_max", momentum_abs_max},
        {"momentum_weighted_sum", momentum_weighted_sum},
    };
    rep["pdf"] = {
        {"atoms", pdf.atoms()},
        {"merged", pdf.merged},
    };
    rep["grid"] = {
        {"bins", cfg.bins},
        {"lo", cfg.grid_lo},
        {"hi", cfg.grid_hi},
        {"mass_error", std::abs(grid.mass() - 1.0)},
        {"first_moment", grid_first_moment(grid)},
    };
    rep["phase"] = {
        {"s_end", phase.s.back()},
    };
    rep["quantum"] = {
        {"expansion_constants", {constants.first, constants.second}},
        {"variety_continuum", v_continuum},
        {"z_v", zv},
        {"expansion_terms",
         {{"c_const", expansion.c_const},
          {"c_fisher", expansion.c_fisher},
          {"residual", expansion.residual},
          {"err_const", expansion.err_const},
          {"err_fisher", expansion.err_fisher},
          {"window_cells", expansion.window_cells},
          {"excluded_cells", expansion.excluded_cells}}},
        {"kinetic_continuum", kinetic},
        {"residuals",
         {{"hj_max_abs", hj_max},
          {"cont_max_abs", cont_max},
          {"continuity_squared", cfg.continuity_squared}}},
        {"hamiltonian", {{"gaps", ham_gaps}, {"integral", ham_sum}}},
        {"action",
         {{"kinetic", action.kinetic},
          {"dendro_energy", action.dendro_energy},
          {"variety", action.variety},
          {"potential", action.potential},
          {"total", action.total}}},
    };
    rep["determinism"] = {
        {"seed", cfg.seed},
        {"rng", "splitmix64-counter"},
    };

    RunReport out{rep.dump(2) + "\n"};

    if (!cfg.out_dir.empty()) {
        namespace fs = std::filesystem;
        detail::ensure_dir(cfg.out_dir);
        detail::ensure_dir((fs::path(cfg.out_dir) / "plots").string());
        const auto at = [&](const std::string& name) {
            return (fs::path(cfg.out_dir) / name).string();
        };

        detail::write_text_file(at("report.json"), out.json);
        write_events_csv(at("events.csv"), events);
        if (cfg.source == SourceKind::geodesic) {
            write_trajectory_csv(at("trajectory.csv"), traj);
        }

        std::string codes_csv = "id,code,edge,monna\n";
        for (std::size_t i = 0; i < tree.codes.size(); ++i) {
            std::ostringstream edge;
            edge << encode_edge(tree.codes[i]);
            codes_csv += std::to_string(i) + "," + tree.codes[i].to_string() + "," + edge.str() +
                         "," + rational_str(values.values[i]) + "\n";
        }
        detail::write_text_file(at("codes.csv"), codes_csv);

        std::string pdf_csv = "Q,rho\n";
        for (std::size_t j = 0; j < pdf.atoms(); ++j) {
            pdf_csv += format_double(pdf.support[j]) + "," + format_double(pdf.masses[j]) + "\n";
        }
        detail::write_text_file(at("pdf.csv"), pdf_csv);

        std::string grid_csv = "Q,rho,S,UQ,res_hj,res_cont,re_psi,im_psi\n";
        for (int b = 0; b < cfg.bins; ++b) {
            grid_csv += format_double(grid.geom.center(b)) + "," +
                        format_double(grid.density[b]) + "," + format_double(phase.s[b]) + "," +
                        format_double(uq[b]) + "," + format_double(residuals.hamilton_jacobi[b]) +
                        "," + format_double(residuals.continuity[b]) + "," +
                        format_double(state.psi[b].real()) + "," +
                        format_double(state.psi[b].imag()) + "\n";
        }
        detail::write_text_file(at("grid.csv"), grid_csv);

        std::vector<double> centers(cfg.bins);
        for (int b = 0; b < cfg.bins; ++b) centers[b] = grid.geom.center(b);
        detail::write_text_file(at("plots/rho.svg"),
                                detail::render_svg_plot("difference density", centers,
                                                        {{"rho", grid.density}}));
        detail::write_text_file(at("plots/phase.svg"),
                                detail::render_svg_plot("phase", centers, {{"S", phase.s}}));
        detail::write_text_file(at("plots/quantum_potential.svg"),
                                detail::render_svg_plot("quantum potential", centers,
                                                        {{"UQ", uq}}));
        detail::write_text_file(
            at("plots/residuals.svg"),
            detail::render_svg_plot("residuals", centers,
                                    {{"res_hj", residuals.hamilton_jacobi},
                                     {"res_cont", residuals.continuity}}));
    }
    return out;
}

RunReport run_dynamics(const PipelineConfig& cfg) {
    cfg.validate();

    auto events = load_events(cfg);
    if (static_cast<int>(events.size()) < cfg.start) {
        throw IngestionError("dynamics needs at least `start` events");
    }
    const auto scfg = cfg.sequence_config();
    auto seq = grow_sequence(events, cfg.start, scfg);

    json steps = json::array();
    for (std::size_t t = 0; t < seq.steps.size(); ++t) {
        json rec;
        rec["step"] = t;
        rec["n"] = cfg.start + t;
        rec["chosen_candidate"] = nullptr;
        if (t > 0) {
            rec["action_increment"] = action_increment(seq.steps[t - 1], seq.steps[t], scfg);
            rec["dendro_distance_prev"] = dendrogram_distance(seq.steps[t - 1], seq.steps[t]);
        } else {
            rec["action_increment"] = nullptr;
            rec["dendro_distance_prev"] = nullptr;
        }
        steps.push_back(rec);
    }

    if (!cfg.candidates.empty()) {
        auto pool = read_events_csv(cfg.candidates);
        const int rounds = cfg.la_steps < 0
                               ? static_cast<int>(pool.size())
                               : std::min<int>(cfg.la_steps, static_cast<int>(pool.size()));
        for (int round = 0; round < rounds; ++round) {
            CandidateSet set;
            set.events = pool;
            for (auto& c : set.events) {
                c.id = static_cast<std::uint32_t>(events.size());
            }
            const auto result = least_action_step(seq, events, set, scfg);
            json rec;
            rec["step"] = seq.steps.size() - 1;
            rec["n"] = events.size();
            rec["chosen_candidate"] = result.chosen_index;
            rec["action_increment"] = result.increments[result.chosen_index];
            rec["dendro_distance_prev"] =
                dendrogram_distance(seq.steps[seq.steps.size() - 2], seq.steps.back());
            rec["increments"] = result.increments;
            steps.push_back(rec);
            pool.erase(pool.begin() + static_cast<long>(result.chosen_index));
        }
    }

    json rep;
    rep["schema"] = report_schema_version();
    rep["config"] = config_echo(cfg);
    rep["steps"] = steps;
    rep["final"] = {
        {"n", events.size()},
        {"sequence_differences_energy",
         seq.steps.size() >= 2 ? json(sequence_differences_energy(seq)) : json(nullptr)},
    };

    RunReport out{rep.dump(2) + "\n"};
    if (!cfg.out_dir.empty()) {
        detail::ensure_dir(cfg.out_dir);
        detail::write_text_file(
            (std::filesystem::path(cfg.out_dir) / "dynamics.json").string(), out.json);
    }
    return out;
}

const char* report_schema_version() { return "dht.report.v1"; }

namespace {

json number_field() { return {{"type", "number"}}; }
json integer_field() { return {{"type", "integer"}}; }

json object_schema(std::initializer_list<std::pair<std::string, json>> props) {
    json properties = json::object();
    json required = json::array();
    for (const auto& [name, schema] : props) {
        properties[name] = schema;
        required.push_back(name);
    }
    return {{"type", "object"}, {"properties", properties}, {"required", required}};
}

}  // namespace

std::string report_schema_json() {
    json config = object_schema({
        {"source", {{"type", "string"}, {"enum", {"csv", "geodesic", "synthetic"}}}},
        {"input", {{"type", "string"}}},
        {"out_dir", {{"type", "string"}}},
        {"metric", {{"type", "string"}}},
        {"linkage", {{"type", "string"}}},
        {"bins", integer_field()},
        {"grid_lo", number_field()},
        {"grid_hi", number_field()},
        {"tol", number_field()},
        {"a", number_field()},
        {"zv_mode", {{"type", "string"}}},
        {"zv_value", number_field()},
        {"u_mode", {{"type", "string"}}},
        {"density_floor", number_field()},
        {"continuity_squared", {{"type", "boolean"}}},
        {"uq_bohmian_sign", {{"type", "boolean"}}},
        {"abs_differences", {{"type", "boolean"}}},
        {"projection", {{"type", "string"}}},
        {"seed", integer_field()},
        {"synthetic_n", integer_field()},
        {"synthetic_dim", integer_field()},
        {"geo_metric", {{"type", "string"}}},
        {"geo_mass", number_field()},
        {"geo_r0", number_field()},
        {"geo_ds", number_field()},
        {"geo_steps", integer_field()},
        {"stride", integer_field()},
        {"start", integer_field()},
        {"candidates", {{"type", "string"}}},
        {"la_steps", integer_field()},
    });

    json root = object_schema({
        {"schema", {{"type", "string"}, {"enum", {report_schema_version()}}}},
        {"config", config},
        {"dataset", object_schema({
                        {"source", {{"type", "string"}}},
                        {"n", integer_field()},
                        {"dim", integer_field()},
                        {"seed", integer_field()},
                    })},
        {"codes", object_schema({
                      {"n", integer_field()},
                      {"length", integer_field()},
                      {"uniform_event_mass", {{"type", "boolean"}}},
                      {"event_mass", {{"type", "string"}}},
                  })},
        {"views", object_schema({
                      {"variety", number_field()},
                      {"differences_energy", number_field()},
                      {"momentum_abs_max", number_field()},
                      {"momentum_weighted_sum", number_field()},
                  })},
        {"pdf", object_schema({
                    {"atoms", integer_field()},
                    {"merged", integer_field()},
                })},
        {"grid", object_schema({
                     {"bins", integer_field()},
                     {"lo", number_field()},
                     {"hi", number_field()},
                     {"mass_error", number_field()},
                     {"first_moment", number_field()},
                 })},
        {"phase", object_schema({
                      {"s_end", number_field()},
                  })},
        {"quantum",
         object_schema({
             {"expansion_constants",
              {{"type", "array"}, {"items", number_field()}, {"minItems", 2}, {"maxItems", 2}}},
             {"variety_continuum", number_field()},
             {"z_v", number_field()},
             {"expansion_terms", object_schema({
                                     {"c_const", number_field()},
                                     {"c_fisher", number_field()},
                                     {"residual", number_field()},
                                     {"err_const", number_field()},
                                     {"err_fisher", number_field()},
                                     {"window_cells", integer_field()},
                                     {"excluded_cells", integer_field()},
                                 })},
             {"kinetic_continuum", number_field()},
             {"residuals", object_schema({
                               {"hj_max_abs", number_field()},
                               {"cont_max_abs", number_field()},
                               {"continuity_squared", {{"type", "boolean"}}},
                           })},
             {"hamiltonian", object_schema({
                                 {"gaps", integer_field()},
                                 {"integral", number_field()},
                             })},
             {"action", object_schema({
                            {"kinetic", number_field()},
                            {"dendro_energy", number_field()},
                            {"variety", number_field()},
                            {"potential", number_field()},
                            {"total", number_field()},
                        })},
         })},
        {"determinism", object_schema({
                            {"seed", integer_field()},
                            {"rng", {{"type", "string"}}},
                        })},
    });
    root["$id"] = "dht.report.v1.schema.json";
    root["title"] = "DHT pipeline run report";
    return root.dump(2) + "\n";
}

}  // namespace dht
