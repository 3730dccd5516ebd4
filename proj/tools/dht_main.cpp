// dht: batch front door for the dendrogram quantization pipeline.
//
// Subcommands: ingest, geodesic, quantize, dynamics, verify, report.
// Every config-file key is overridable by a CLI flag of the same name.
// Exit codes: 0 success, 2 config error, 3 ingestion error,
// 4 numeric-domain error, 5 verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dht/pipeline.hpp"
#include "dht/verify.hpp"

namespace {

struct KeyOverride {
    std::string key;
    std::string value;
};

void add_config_options(CLI::App* cmd, std::string& config_path,
                        std::vector<KeyOverride>& overrides) {
    cmd->add_option("--config", config_path, "flat key=value config file");
    static const char* keys[] = {
        "source", "input", "out_dir", "metric", "linkage", "bins", "grid_lo", "grid_hi",
        "tol", "a", "zv_mode", "zv_value", "u_mode", "density_floor", "continuity_squared",
        "uq_bohmian_sign", "abs_differences", "projection", "seed", "synthetic_n",
        "synthetic_dim", "geo_metric", "geo_mass", "geo_r0", "geo_ds", "geo_steps", "stride",
        "start", "candidates", "la_steps",
    };
    for (const char* key : keys) {
        cmd->add_option_function<std::string>(
            std::string("--") + key,
            [&overrides, key](const std::string& value) {
                overrides.push_back({key, value});
            },
            "config key override");
    }
}

dht::PipelineConfig build_config(const std::string& config_path,
                                 const std::vector<KeyOverride>& overrides) {
    dht::PipelineConfig cfg;
    if (!config_path.empty()) cfg = dht::PipelineConfig::from_file(config_path);
    for (const auto& kv : overrides) cfg.apply(kv.key, kv.value);
    return cfg;
}

void emit_error(const std::string& category, const std::string& message) {
    nlohmann::json j;
    j["error"] = {{"category", category}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

int cmd_ingest(const dht::PipelineConfig& cfg) {
    if (cfg.input.empty()) throw dht::ConfigError("ingest requires --input <events.csv>");
    const auto events = dht::read_events_csv(cfg.input);
    nlohmann::json j;
    j["input"] = cfg.input;
    j["n"] = events.size();
    j["dim"] = events.empty() ? 0 : events.front().coords.size();
    j["valid"] = true;
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        dht::write_events_csv((std::filesystem::path(cfg.out_dir) / "events.csv").string(),
                              events);
        std::ofstream out(std::filesystem::path(cfg.out_dir) / "ingest.json");
        out << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_geodesic(dht::PipelineConfig cfg) {
    cfg.source = dht::SourceKind::geodesic;
    cfg.validate();
    dht::GeodesicTrajectory traj;
    const auto events = dht::load_events(cfg, &traj);
    if (cfg.out_dir.empty()) throw dht::ConfigError("geodesic requires --out_dir");
    std::filesystem::create_directories(cfg.out_dir);
    dht::write_trajectory_csv((std::filesystem::path(cfg.out_dir) / "trajectory.csv").string(),
                              traj);
    dht::write_events_csv((std::filesystem::path(cfg.out_dir) / "events.csv").string(), events);
    nlohmann::json j;
    j["samples"] = traj.samples.size();
    j["events"] = events.size();
    j["metric"] = cfg.geo_metric;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_quantize(const dht::PipelineConfig& cfg) {
    const auto report = dht::run_pipeline(cfg);
    if (cfg.out_dir.empty()) {
        std::cout << report.json;
    } else {
        std::cout << "report written to "
                  << (std::filesystem::path(cfg.out_dir) / "report.json").string() << "\n";
    }
    return 0;
}

int cmd_dynamics(const dht::PipelineConfig& cfg) {
    const auto report = dht::run_dynamics(cfg);
    if (cfg.out_dir.empty()) {
        std::cout << report.json;
    } else {
        std::cout << "dynamics written to "
                  << (std::filesystem::path(cfg.out_dir) / "dynamics.json").string() << "\n";
    }
    return 0;
}

int cmd_verify(const dht::PipelineConfig& cfg) {
    const auto report = dht::run_verification();
    std::cout << report.to_text();
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        std::ofstream out(std::filesystem::path(cfg.out_dir) / "verify.json");
        out << report.to_json();
    }
    if (!report.all_pass()) {
        std::string failing;
        for (const auto& c : report.checks) {
            if (!c.pass) failing += (failing.empty() ? "" : ", ") + c.name;
        }
        emit_error("verification", "failing checks: " + failing);
        return 5;
    }
    return 0;
}

int cmd_report(const dht::PipelineConfig& cfg) {
    if (cfg.input.empty()) throw dht::ConfigError("report requires --input <report.json>");
    std::ifstream in(cfg.input);
    if (!in) throw dht::IngestionError("cannot open report '" + cfg.input + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw dht::IngestionError(std::string("cannot parse report: ") + e.what());
    }
    std::ostringstream out;
    out << "schema:   " << doc.value("schema", std::string("?")) << "\n";
    if (doc.contains("dataset")) {
        out << "dataset:  n=" << doc["dataset"].value("n", 0)
            << " dim=" << doc["dataset"].value("dim", 0) << " source="
            << doc["dataset"].value("source", std::string("?")) << "\n";
    }
    if (doc.contains("views")) {
        out << "views:    variety=" << doc["views"].value("variety", 0.0)
            << " T=" << doc["views"].value("differences_energy", 0.0) << "\n";
    }
    if (doc.contains("quantum")) {
        const auto& q = doc["quantum"];
        if (q.contains("expansion_constants")) {
            out << "quantum:  constants=[" << q["expansion_constants"][0] << ", "
                << q["expansion_constants"][1] << "]\n";
        }
        if (q.contains("action")) {
            out << "action:   total=" << q["action"].value("total", 0.0) << "\n";
        }
    }
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dendrogram quantization pipeline"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<KeyOverride> overrides;

    auto* ingest = app.add_subcommand("ingest", "validate and normalize an events CSV");
    auto* geodesic = app.add_subcommand("geodesic", "integrate a geodesic and sample events");
    auto* quantize = app.add_subcommand("quantize", "run the full quantization pipeline");
    auto* dynamics = app.add_subcommand("dynamics", "grow a dendrogram sequence / least action");
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    auto* report = app.add_subcommand("report", "summarize an existing report.json");
    for (auto* cmd : {ingest, geodesic, quantize, dynamics, verify, report}) {
        add_config_options(cmd, config_path, overrides);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error("config", e.what());
        return 2;
    }

    try {
        const auto cfg = build_config(config_path, overrides);
        if (ingest->parsed()) return cmd_ingest(cfg);
        if (geodesic->parsed()) return cmd_geodesic(cfg);
        if (quantize->parsed()) return cmd_quantize(cfg);
        if (dynamics->parsed()) return cmd_dynamics(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (report->parsed()) return cmd_report(cfg);
        emit_error("config", "no subcommand given");
        return 2;
    } catch (const dht::Error& e) {
        const char* category = e.kind() == dht::ErrorKind::config      ? "config"
                               : e.kind() == dht::ErrorKind::ingestion ? "ingestion"
                                                                       : "numeric";
        emit_error(category, e.what());
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}
