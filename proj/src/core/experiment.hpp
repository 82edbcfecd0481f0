#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core/centrality.hpp"
#include "core/contagion.hpp"
#include "core/ingest.hpp"
#include "core/link_prediction.hpp"
#include "core/seed_selection.hpp"

namespace ssm {

/// Label of the records whose seeds come from the raw training graph.
inline constexpr std::string_view kTrainingBaseline = "Training";
/// Label of the ground-truth series (seeds chosen on the full graph).
inline constexpr std::string_view kOriginalSeries = "Original";

struct ExperimentConfig {
    std::string input_path;
    InputFormat input_format = InputFormat::Snap;
    double default_weight = 1.0;

    std::vector<double> fractions{0.7, 0.9};
    /// Paired with `fractions` element-wise unless `cross_horizons` is set.
    std::vector<unsigned> horizons{3, 1};
    bool cross_horizons = false;

    std::size_t k = 25;
    unsigned trials = 10;
    std::uint64_t seed = 42;

    std::vector<MetricId> metrics{kAllMetrics.begin(), kAllMetrics.end()};
    std::vector<CentralityId> centralities{kAllCentralities.begin(), kAllCentralities.end()};
    std::vector<AlgorithmId> algorithms = default_algorithms();
    std::vector<ContagionModel> contagions{ContagionModel::Complex, ContagionModel::Simple};

    ComplexParams contagion{};
    LinkPredictionParams link_prediction{};
    double normalization_cap = 1.0;
    CentralityParams centrality{};

    /// Also evaluate seeds picked on the raw training graph.
    bool training_baseline = true;
    unsigned threads = 0;
    std::string output_dir = "ssm-output";
};

/// Applies one "section.key = value" setting, e.g. "experiment.k" = "25".
/// List values are comma-separated.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Reads an INI file ([input], [experiment], [contagion], [link_prediction],
/// [centrality] sections) on top of `cfg`.
void load_config_file(ExperimentConfig& cfg, const std::string& path);

/// Every recognized setting key with its current value, for manifests.
std::map<std::string, std::string> describe(const ExperimentConfig& cfg);

void validate(const ExperimentConfig& cfg);

struct Scenario {
    double fraction;
    unsigned horizon;
    std::string label;
};

/// Labels are the fraction ("0.7"), suffixed with the horizon ("0.7-t3") when
/// some fraction is paired with more than one horizon.
std::vector<Scenario> scenarios(const ExperimentConfig& cfg);
std::string scenario_label(double fraction, unsigned horizon, bool with_horizon);

struct CellKey {
    std::string scenario;
    double fraction = 1.0;
    unsigned horizon = 0;
    std::string metric;
    std::string centrality;
    std::string algorithm;
    std::string contagion;
    unsigned trial = 0;
};

bool operator<(const CellKey& a, const CellKey& b);
std::string describe(const CellKey& key);

struct ExperimentResult {
    CellKey key;
    double mse = 0.0;
    double overlap = 0.0;
    SpreadCurve predicted;
    SpreadCurve observed;
};

struct CellFailure {
    std::string cell;
    std::string message;
};

struct GridOutput {
    std::vector<ExperimentResult> records;  // canonically sorted
    std::vector<CellFailure> failures;      // sorted by cell description
    std::size_t expected_records = 0;       // excluding baselines
};

using ProgressFn = std::function<void(const std::string&)>;

/// Runs the full evaluation grid against `full`. Values are rounded to the
/// precision written to disk, so aggregates recomputed from files match.
GridOutput run_grid(const ExperimentConfig& cfg, const Graph& full, const ProgressFn& progress = {});

// --- outputs --------------------------------------------------------------

struct TableSet {
    /// file name (relative to tables/) -> CSV contents
    std::map<std::string, std::string> files;
};

TableSet aggregate_tables(const std::vector<ExperimentResult>& records);

struct CurveSet {
    /// file name (relative to curves/) -> CSV contents
    std::map<std::string, std::string> files;
};

CurveSet emit_curves(const std::vector<ExperimentResult>& records);

std::string results_csv(const std::vector<ExperimentResult>& records);
std::string curve_records_csv(const std::vector<ExperimentResult>& records);

/// Parses results.csv (curves left empty).
std::vector<ExperimentResult> parse_results_csv(std::string_view text);
/// Parses curve_records.csv (all fields).
std::vector<ExperimentResult> parse_curve_records_csv(std::string_view text);

struct DatasetSummary {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

std::string manifest_json(const ExperimentConfig& cfg, const DatasetSummary& dataset, const GridOutput& grid);

/// Writes results.csv, curve_records.csv, tables/, curves/ and run.json.
void write_outputs(const std::filesystem::path& dir, const ExperimentConfig& cfg, const DatasetSummary& dataset,
                   const GridOutput& grid);

/// Regenerates tables/ from results.csv in `dir`.
void rebuild_tables(const std::filesystem::path& dir);
/// Regenerates curves/ from curve_records.csv in `dir`.
void rebuild_curves(const std::filesystem::path& dir);

struct RunSummary {
    std::size_t records = 0;
    std::size_t failures = 0;
    std::filesystem::path output_dir;
};

/// Loads the input named in `cfg`, runs the grid and writes all outputs.
/// The SSM_OUTPUT_DIR environment variable overrides cfg.output_dir.
RunSummary run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress = {});

} // namespace ssm
