#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dht/dynamics.hpp"
#include "dht/geodesic.hpp"

namespace dht {

enum class SourceKind { csv, geodesic, synthetic };
SourceKind parse_source(const std::string& s);
std::string to_string(SourceKind k);

// Flat key=value configuration; every key is overridable by a CLI flag of
// the same name.
struct PipelineConfig {
    SourceKind source = SourceKind::csv;
    std::string input;    // events CSV for the csv source
    std::string out_dir;  // artifact directory; empty = compute only

    std::string metric = "euclidean";
    std::string linkage = "average";
    int bins = 64;
    double grid_lo = -1.0;
    double grid_hi = 1.0;
    double tol = 1e-12;
    double a = 1.0;
    std::string zv_mode = "auto";  // auto | fixed
    double zv_value = -36.0;
    std::string u_mode = "zero";  // zero | one | rho
    double density_floor = 1e-12;
    bool continuity_squared = false;
    bool uq_bohmian_sign = false;
    bool abs_differences = false;
    std::string projection = "coords";  // coords | acceleration
    std::uint64_t seed = 1;

    // synthetic source
    int synthetic_n = 16;
    int synthetic_dim = 3;

    // geodesic source
    std::string geo_metric = "schwarzschild";  // minkowski | schwarzschild
    double geo_mass = 1.0;
    double geo_r0 = 6.0;  // in units of M for schwarzschild
    double geo_ds = 0.1;
    int geo_steps = 511;
    int stride = 1;

    // dynamics
    int start = 3;
    std::string candidates;  // optional candidate events CSV
    int la_steps = -1;       // least-action rounds; -1 = all candidates

    static PipelineConfig from_file(const std::string& path);
    void apply(const std::string& key, const std::string& value);
    void validate() const;

    DistanceMetric distance_metric() const { return parse_distance_metric(metric); }
    Linkage linkage_spec() const { return parse_linkage(linkage); }
    UMode u_mode_spec() const { return parse_u_mode(u_mode); }
    Projection projection_spec() const { return parse_projection(projection); }
    GridGeometry grid() const { return {grid_lo, grid_hi, bins}; }
    SequenceConfig sequence_config() const;
};

struct RunReport {
    std::string json;  // serialized report document
};

// Strict reader for the `id,c0,c1,...` events CSV (UTF-8, LF).
std::vector<EventPoint> read_events_csv(const std::string& path);
void write_events_csv(const std::string& path, const std::vector<EventPoint>& events);
void write_trajectory_csv(const std::string& path, const GeodesicTrajectory& traj);

// Materializes the configured source; geodesic sources also return the
// integrated trajectory through *traj_out when given.
std::vector<EventPoint> load_events(const PipelineConfig& cfg,
                                    GeodesicTrajectory* traj_out = nullptr);

// The full batch pipeline: source -> distances -> dendrogram -> codes ->
// views -> pdf -> grid -> phase -> quantum diagnostics. Writes report.json,
// codes.csv, pdf.csv, grid.csv, trajectory.csv (geodesic source) and
// plots/*.svg into out_dir when set.
RunReport run_pipeline(const PipelineConfig& cfg);

// Sequence dynamics over the configured source: grow from `start`, then
// least-action selection over candidate events when provided. Writes
// dynamics.json into out_dir when set.
RunReport run_dynamics(const PipelineConfig& cfg);

// The versioned RunReport schema shipped at schema/report.schema.json.
std::string report_schema_json();
const char* report_schema_version();

}  // namespace dht
