// ssm: command-line front end for the Social Sphere pipeline.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssm/ssm.h"

namespace {

int report(ssm_status status) {
    if (status == SSM_OK) return 0;
    std::cerr << "ssm: " << ssm_status_name(status) << ": " << ssm_last_error() << "\n";
    return status == SSM_ERR_PARTIAL ? 1 : 2;
}

struct GraphHandle {
    ssm_graph* g = nullptr;
    ~GraphHandle() { ssm_graph_free(g); }
};

struct InputOptions {
    std::string path;
    std::string format = "snap";
    double default_weight = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("-i,--input", path, "Edge list to read")->required()->check(CLI::ExistingFile);
        cmd->add_option("-f,--format", format, "snap or weighted")->capture_default_str();
        cmd->add_option("--default-weight", default_weight, "Weight given to unweighted edges")->capture_default_str();
    }
};

void print_progress(const char* message, void*) { std::cerr << message << "\n"; }

/// run flags and the config keys they set
const std::vector<std::pair<std::string, std::string>> kRunFlags = {
    {"-i,--input", "input.path"},
    {"-f,--format", "input.format"},
    {"--default-weight", "input.default_weight"},
    {"--fractions", "experiment.fractions"},
    {"--horizons", "experiment.horizons"},
    {"--cross-horizons", "experiment.cross_horizons"},
    {"--k", "experiment.k"},
    {"--trials", "experiment.trials"},
    {"--seed", "experiment.seed"},
    {"--metrics", "experiment.metrics"},
    {"--centralities", "experiment.centralities"},
    {"--algorithms", "experiment.algorithms"},
    {"--contagions", "experiment.contagions"},
    {"--training-baseline", "experiment.training_baseline"},
    {"--threads", "experiment.threads"},
    {"-o,--output", "experiment.output"},
    {"--theta", "contagion.theta"},
    {"--contagion-horizon", "contagion.horizon"},
    {"--cap", "link_prediction.cap"},
    {"--weighted-metrics", "link_prediction.weighted"},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Predict future influencers from partially observed networks"};
    app.set_version_flag("--version", std::string(ssm_version()));
    app.require_subcommand(1);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Load an edge list and report its size");
    InputOptions ingest_in;
    ingest_in.attach(ingest);
    std::string ingest_out, ingest_out_format = "snap";
    ingest->add_option("-o,--output", ingest_out, "Write the cleaned graph here");
    ingest->add_option("--output-format", ingest_out_format, "snap or weighted")->capture_default_str();

    // predict
    auto* predict = app.add_subcommand("predict", "Build and dump a predicted graph");
    InputOptions predict_in;
    predict_in.attach(predict);
    double fraction = 1.0, cap = 1.0;
    std::uint64_t seed = 42;
    std::string metric = "RA2", predict_out;
    unsigned horizon = 1;
    predict->add_option("--fraction", fraction, "Fraction of edges kept as the training graph")->capture_default_str();
    predict->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    predict->add_option("-m,--metric", metric, "Similarity metric")->capture_default_str();
    predict->add_option("-t,--horizon", horizon, "Prediction horizon")->capture_default_str();
    predict->add_option("--cap", cap, "Largest edge probability")->capture_default_str();
    predict->add_option("-o,--output", predict_out, "Predicted graph output (u v w origin)")->required();

    // run
    auto* run = app.add_subcommand("run", "Run the evaluation grid");
    std::string config_path;
    std::vector<std::string> overrides;
    std::map<std::string, std::string> flag_values;
    bool quiet = false;
    run->add_option("-c,--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
    std::vector<std::pair<CLI::Option*, std::string>> run_options;
    for (const auto& [flag, key] : kRunFlags)
        run_options.emplace_back(run->add_option(flag, flag_values[key], "Sets " + key), key);
    run->add_option("--set", overrides, "Extra section.key=value settings");
    run->add_flag("-q,--quiet", quiet, "No progress output");

    // tables, curves
    std::string tables_dir, curves_dir;
    auto* tables = app.add_subcommand("tables", "Rebuild tables/ from results.csv");
    tables->add_option("-r,--results", tables_dir, "Output directory of a run")->required()->check(CLI::ExistingDirectory);
    auto* curves = app.add_subcommand("curves", "Rebuild curves/ from curve_records.csv");
    curves->add_option("-r,--results", curves_dir, "Output directory of a run")->required()->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*ingest) {
        GraphHandle h;
        if (int rc = report(ssm_graph_load(ingest_in.path.c_str(), ingest_in.format.c_str(), ingest_in.default_weight, &h.g)))
            return rc;
        std::cout << "nodes " << ssm_graph_node_count(h.g) << "\n"
                  << "edges " << ssm_graph_edge_count(h.g) << "\n"
                  << "self_loops_dropped " << ssm_graph_self_loops_dropped(h.g) << "\n"
                  << "duplicates_collapsed " << ssm_graph_duplicates_collapsed(h.g) << "\n";
        if (!ingest_out.empty()) return report(ssm_graph_save(h.g, ingest_out.c_str(), ingest_out_format.c_str()));
        return 0;
    }

    if (*predict) {
        GraphHandle full, train, predicted;
        if (int rc = report(ssm_graph_load(predict_in.path.c_str(), predict_in.format.c_str(), predict_in.default_weight,
                                           &full.g)))
            return rc;
        if (int rc = report(ssm_graph_sample(full.g, fraction, seed, &train.g))) return rc;
        if (int rc = report(ssm_graph_predict(train.g, metric.c_str(), cap, horizon, &predicted.g))) return rc;
        std::cout << "training edges " << ssm_graph_edge_count(train.g) << "\n"
                  << "predicted edges " << ssm_graph_predicted_edge_count(predicted.g) << "\n";
        return report(ssm_graph_save(predicted.g, predict_out.c_str(), "weighted"));
    }

    if (*run) {
        ssm_config* cfg = nullptr;
        if (int rc = report(ssm_config_new(&cfg))) return rc;
        auto configure = [&]() -> ssm_status {
            if (!config_path.empty())
                if (auto st = ssm_config_load_file(cfg, config_path.c_str()); st != SSM_OK) return st;
            for (const auto& [opt, key] : run_options)
                if (opt->count() > 0)
                    if (auto st = ssm_config_set(cfg, key.c_str(), flag_values[key].c_str()); st != SSM_OK) return st;
            for (const auto& kv : overrides) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "ssm: --set expects section.key=value, got '" << kv << "'\n";
                    return SSM_ERR_INVALID_ARGUMENT;
                }
                if (auto st = ssm_config_set(cfg, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()); st != SSM_OK)
                    return st;
            }
            return SSM_OK;
        };
        int rc = report(configure());
        ssm_run_summary summary{};
        if (rc == 0) {
            rc = report(ssm_run_experiment(cfg, quiet ? nullptr : print_progress, nullptr, &summary));
            if (rc != 2) std::cout << "records " << summary.records << "\nfailed cells " << summary.failures << "\n";
        }
        ssm_config_free(cfg);
        return rc;
    }

    if (*tables) return report(ssm_write_tables(tables_dir.c_str()));
    if (*curves) return report(ssm_write_curves(curves_dir.c_str()));
    return 0;
}
