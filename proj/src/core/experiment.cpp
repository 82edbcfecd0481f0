#include "core/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <variant>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/evaluation.hpp"
#include "core/parallel.hpp"
#include "core/random.hpp"
#include "core/social_sphere.hpp"
#include "core/text.hpp"
#include "core/version.hpp"

namespace ssm {

namespace {

constexpr int kDecimals = 6;

double rounded(double x) {
    double out = 0.0;
    text::parse_double(text::fixed(x, kDecimals), out);
    return out;
}

SpreadCurve rounded(const SpreadCurve& c) {
    SpreadCurve out;
    out.fractions.reserve(c.fractions.size());
    for (double x : c.fractions) out.fractions.push_back(rounded(x));
    return out;
}

auto key_tuple(const CellKey& k) {
    return std::tie(k.fraction, k.horizon, k.metric, k.centrality, k.algorithm, k.contagion, k.trial);
}

/// Memoizes centralities and seed sets on one graph. Failures are cached
/// too, so a broken centrality is attempted once per graph.
class SelectionCache {
public:
    SelectionCache(const Graph& g, std::size_t k, const CentralityParams& params) : g_(g), k_(k), params_(params) {}

    const CentralityVector& centrality_of(CentralityId id) {
        auto it = centralities_.find(id);
        if (it == centralities_.end()) {
            Entry<CentralityVector> e;
            try {
                e = ssm::centrality(g_, id, params_);
            } catch (const Error& err) {
                e = Failure{err.code(), std::string(to_string(id)) + ": " + err.what()};
            }
            it = centralities_.emplace(id, std::move(e)).first;
        }
        return unwrap(it->second);
    }

    /// Key identifying the seed set an algorithm produces in a cell.
    static std::string selection_key(const AlgorithmId& alg, CentralityId cell) {
        auto base = required_centrality(alg, cell);
        return to_string(alg) + "|" + (base ? std::string(to_string(*base)) : std::string("-"));
    }

    const SeedSet& seeds(const AlgorithmId& alg, CentralityId cell) {
        auto key = selection_key(alg, cell);
        auto it = seeds_.find(key);
        if (it == seeds_.end()) {
            Entry<SeedSet> e;
            try {
                auto base = required_centrality(alg, cell);
                e = base ? select_seeds(g_, alg, k_, centrality_of(*base)) : select_seeds(g_, alg, k_);
            } catch (const Error& err) {
                e = Failure{err.code(), err.what()};
            }
            it = seeds_.emplace(key, std::move(e)).first;
        }
        return unwrap(it->second);
    }

private:
    struct Failure {
        ErrorCode code;
        std::string message;
    };
    template <typename T>
    using Entry = std::variant<T, Failure>;

    template <typename T>
    static const T& unwrap(const Entry<T>& e) {
        if (const auto* f = std::get_if<Failure>(&e)) throw Error(f->code, f->message);
        return std::get<T>(e);
    }

    const Graph& g_;
    std::size_t k_;
    CentralityParams params_;
    std::map<CentralityId, Entry<CentralityVector>> centralities_;
    std::map<std::string, Entry<SeedSet>> seeds_;
};

struct Truth {
    SeedSet seeds;
    std::map<ContagionModel, SpreadCurve> curves;
};

struct Job {
    std::size_t scenario;
    unsigned trial;
    std::optional<MetricId> metric;  // empty: training baseline
};

struct JobOutput {
    std::vector<ExperimentResult> records;
    std::vector<CellFailure> failures;
};

std::string cell_name(const Scenario& s, std::string_view metric, std::string_view centrality,
                      std::string_view algorithm, std::string_view contagion, unsigned trial) {
    CellKey key{s.label, s.fraction, s.horizon, std::string(metric), std::string(centrality), std::string(algorithm),
                std::string(contagion), trial};
    return describe(key);
}

} // namespace

bool operator<(const CellKey& a, const CellKey& b) { return key_tuple(a) < key_tuple(b); }

std::string describe(const CellKey& key) {
    return "fraction=" + text::shortest(key.fraction) + " horizon=" + std::to_string(key.horizon) +
           " metric=" + key.metric + " centrality=" + key.centrality + " algorithm=" + key.algorithm +
           " contagion=" + key.contagion + " trial=" + std::to_string(key.trial);
}

GridOutput run_grid(const ExperimentConfig& cfg, const Graph& full, const ProgressFn& progress) {
    validate(cfg);
    const auto scen = scenarios(cfg);
    {
        std::set<std::string> labels;
        for (const auto& s : scen)
            if (!labels.insert(s.label).second)
                throw Error(ErrorCode::InvalidArgument, "duplicate scenario '" + s.label + "'");
    }
    auto say = [&](const std::string& msg) {
        if (progress) progress(msg);
    };

    std::vector<Job> jobs;
    for (std::size_t s = 0; s < scen.size(); ++s)
        for (unsigned trial = 0; trial < cfg.trials; ++trial) {
            for (MetricId m : cfg.metrics) jobs.push_back({s, trial, m});
            if (cfg.training_baseline) jobs.push_back({s, trial, std::nullopt});
        }

    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_thread_count(cfg.threads), std::max<std::size_t>(jobs.size(), 1)));
    CentralityParams cparams = cfg.centrality;
    cparams.threads = workers > 1 ? 1 : cfg.threads;

    // Ground truth: the same selection on the full graph, shared by every trial and metric.
    say("ground truth on full graph (" + std::to_string(full.node_count()) + " nodes)");
    SelectionCache truth_cache(full, cfg.k, cparams);
    std::map<std::string, std::variant<Truth, std::string>> truths;
    for (CentralityId c : cfg.centralities)
        for (const AlgorithmId& a : cfg.algorithms) {
            auto key = SelectionCache::selection_key(a, c);
            if (truths.count(key)) continue;
            try {
                Truth t;
                t.seeds = truth_cache.seeds(a, c);
                for (ContagionModel m : cfg.contagions) {
                    auto curve = simulate(full, m, t.seeds.nodes, cfg.contagion);
                    check_curve(curve);
                    t.curves[m] = rounded(curve);
                }
                truths.emplace(key, std::move(t));
            } catch (const Error& e) {
                truths.emplace(key, std::string("ground truth: ") + e.what());
            }
        }

    std::vector<JobOutput> outputs(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex progress_mutex;
    std::size_t done = 0;

    auto run_job = [&](const Job& job, JobOutput& out) {
        const Scenario& s = scen[job.scenario];
        const std::string metric = job.metric ? std::string(to_string(*job.metric)) : std::string(kTrainingBaseline);
        auto fail_all = [&](const std::string& msg) {
            for (CentralityId c : cfg.centralities)
                for (const AlgorithmId& a : cfg.algorithms)
                    for (ContagionModel m : cfg.contagions)
                        out.failures.push_back(
                            {cell_name(s, metric, to_string(c), to_string(a), to_string(m), job.trial), msg});
        };

        Graph graph;
        try {
            Graph train = sample_training_graph(full, {s.fraction, derive_seed(cfg.seed, job.trial)});
            if (!job.metric || s.horizon == 0) {
                graph = std::move(train);
            } else {
                auto scores = similarity_scores(train, *job.metric, cfg.link_prediction, cfg.normalization_cap);
                graph = build_predicted_graph(train, scores.normalized, Horizon{s.horizon}).graph();
            }
        } catch (const Error& e) {
            fail_all(e.what());
            return;
        }

        SelectionCache cache(graph, cfg.k, cparams);
        std::map<std::string, std::map<ContagionModel, SpreadCurve>> curve_cache;
        for (CentralityId c : cfg.centralities)
            for (const AlgorithmId& a : cfg.algorithms) {
                const auto sel = SelectionCache::selection_key(a, c);
                try {
                    const auto& truth_entry = truths.at(sel);
                    if (const auto* msg = std::get_if<std::string>(&truth_entry)) throw Error(ErrorCode::Internal, *msg);
                    const Truth& truth = std::get<Truth>(truth_entry);
                    const SeedSet& seeds = cache.seeds(a, c);
                    const double ov = rounded(overlap(seeds, truth.seeds));
                    auto& curves = curve_cache[sel];
                    for (ContagionModel m : cfg.contagions) {
                        auto it = curves.find(m);
                        if (it == curves.end()) {
                            auto curve = simulate(full, m, seeds.nodes, cfg.contagion);
                            check_curve(curve);
                            it = curves.emplace(m, rounded(curve)).first;
                        }
                        const SpreadCurve& observed = truth.curves.at(m);
                        ExperimentResult r;
                        r.key = {s.label, s.fraction, s.horizon, metric, std::string(to_string(c)), to_string(a),
                                 std::string(to_string(m)), job.trial};
                        r.mse = rounded(ssm::mse(it->second, observed));
                        r.overlap = ov;
                        r.predicted = it->second;
                        r.observed = observed;
                        out.records.push_back(std::move(r));
                    }
                } catch (const Error& e) {
                    for (ContagionModel m : cfg.contagions)
                        out.failures.push_back(
                            {cell_name(s, metric, to_string(c), to_string(a), to_string(m), job.trial), e.what()});
                }
            }
    };

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            run_job(jobs[i], outputs[i]);
            std::lock_guard lock(progress_mutex);
            ++done;
            const Job& j = jobs[i];
            say("[" + std::to_string(done) + "/" + std::to_string(jobs.size()) + "] " + scen[j.scenario].label +
                " trial " + std::to_string(j.trial) + " " +
                (j.metric ? std::string(to_string(*j.metric)) : std::string(kTrainingBaseline)) +
                (outputs[i].failures.empty() ? "" : " (" + std::to_string(outputs[i].failures.size()) + " failed cells)"));
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    GridOutput grid;
    for (auto& o : outputs) {
        std::move(o.records.begin(), o.records.end(), std::back_inserter(grid.records));
        std::move(o.failures.begin(), o.failures.end(), std::back_inserter(grid.failures));
    }
    std::sort(grid.records.begin(), grid.records.end(),
              [](const ExperimentResult& a, const ExperimentResult& b) { return a.key < b.key; });
    std::sort(grid.failures.begin(), grid.failures.end(),
              [](const CellFailure& a, const CellFailure& b) { return a.cell < b.cell; });
    grid.expected_records = scen.size() * cfg.trials * cfg.metrics.size() * cfg.centralities.size() *
                            cfg.algorithms.size() * cfg.contagions.size();
    return grid;
}

// --- record files -----------------------------------------------------------

namespace {

constexpr std::string_view kResultsHeader = "fraction,horizon,metric,centrality,algorithm,contagion,trial,mse,overlap";
constexpr std::string_view kCurveHeader =
    "fraction,horizon,metric,centrality,algorithm,contagion,trial,predicted,observed";

std::string key_columns(const CellKey& k) {
    return text::shortest(k.fraction) + "," + std::to_string(k.horizon) + "," + k.metric + "," + k.centrality + "," +
           k.algorithm + "," + k.contagion + "," + std::to_string(k.trial);
}

std::string curve_field(const SpreadCurve& c) {
    std::string out;
    for (std::size_t i = 0; i < c.fractions.size(); ++i) {
        if (i) out += ' ';
        out += text::fixed(c.fractions[i], kDecimals);
    }
    return out;
}

std::vector<std::string> csv_cells(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        out.emplace_back(text::trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double cell_double(const std::string& s, std::size_t line) {
    double x = 0.0;
    if (!text::parse_double(s, x))
        throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": '" + s + "' is not a number");
    return x;
}

unsigned cell_unsigned(const std::string& s, std::size_t line) {
    unsigned x = 0;
    if (!text::parse_int(s, x))
        throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": '" + s + "' is not an integer");
    return x;
}

template <typename Row>
std::vector<ExperimentResult> parse_records(std::string_view text, std::string_view header, Row&& row) {
    std::vector<ExperimentResult> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool seen_header = false;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        auto line = text::trim(text.substr(start, end == std::string_view::npos ? end : end - start));
        ++line_no;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (line.empty()) continue;
        if (!seen_header) {
            if (line != header) throw Error(ErrorCode::Parse, "unexpected header '" + std::string(line) + "'");
            seen_header = true;
            continue;
        }
        auto cells = csv_cells(line);
        if (cells.size() != 9)
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 9 columns, got " +
                                              std::to_string(cells.size()));
        ExperimentResult r;
        r.key.fraction = cell_double(cells[0], line_no);
        r.key.horizon = cell_unsigned(cells[1], line_no);
        r.key.metric = cells[2];
        r.key.centrality = cells[3];
        r.key.algorithm = cells[4];
        r.key.contagion = cells[5];
        r.key.trial = cell_unsigned(cells[6], line_no);
        row(r, cells[7], cells[8], line_no);
        out.push_back(std::move(r));
    }
    if (!seen_header) throw Error(ErrorCode::Parse, "missing header");
    // Scenario labels: the fraction alone unless one fraction carries several horizons.
    std::map<double, std::set<unsigned>> horizons;
    for (const auto& r : out) horizons[r.key.fraction].insert(r.key.horizon);
    bool crossed = false;
    for (const auto& [f, hs] : horizons) crossed = crossed || hs.size() > 1;
    for (auto& r : out)
        r.key.scenario = scenario_label(r.key.fraction, r.key.horizon, crossed);
    return out;
}

SpreadCurve parse_curve(const std::string& s, std::size_t line) {
    SpreadCurve c;
    for (auto f : text::fields(s)) c.fractions.push_back(cell_double(std::string(f), line));
    return c;
}

} // namespace

std::string results_csv(const std::vector<ExperimentResult>& records) {
    std::string out(kResultsHeader);
    out += '\n';
    for (const auto& r : records)
        out += key_columns(r.key) + "," + text::fixed(r.mse, kDecimals) + "," + text::fixed(r.overlap, kDecimals) + "\n";
    return out;
}

std::string curve_records_csv(const std::vector<ExperimentResult>& records) {
    std::string out(kCurveHeader);
    out += '\n';
    for (const auto& r : records)
        out += key_columns(r.key) + "," + curve_field(r.predicted) + "," + curve_field(r.observed) + "\n";
    return out;
}

std::vector<ExperimentResult> parse_results_csv(std::string_view text) {
    return parse_records(text, kResultsHeader,
                         [](ExperimentResult& r, const std::string& a, const std::string& b, std::size_t line) {
                             r.mse = cell_double(a, line);
                             r.overlap = cell_double(b, line);
                         });
}

std::vector<ExperimentResult> parse_curve_records_csv(std::string_view text) {
    return parse_records(text, kCurveHeader,
                         [](ExperimentResult& r, const std::string& a, const std::string& b, std::size_t line) {
                             r.predicted = parse_curve(a, line);
                             r.observed = parse_curve(b, line);
                             r.mse = ssm::mse(r.predicted, r.observed);
                         });
}

// --- tables -----------------------------------------------------------------

namespace {

struct Mean {
    double sum = 0.0;
    std::size_t n = 0;
    void add(double x) {
        sum += x;
        ++n;
    }
    double value() const { return sum / static_cast<double>(n); }
};

/// Scenarios in (fraction, horizon) order.
std::vector<std::string> scenario_order(const std::vector<ExperimentResult>& records) {
    std::map<std::pair<double, unsigned>, std::string> order;
    for (const auto& r : records) order.emplace(std::make_pair(r.key.fraction, r.key.horizon), r.key.scenario);
    std::vector<std::string> out;
    for (const auto& [_, label] : order) out.push_back(label);
    return out;
}

/// Row-by-column table of cell means with an Overall row and column, each the
/// mean of the displayed cell means.
std::string pivot(std::string_view corner, const std::map<std::string, std::map<std::string, Mean>>& cells) {
    std::set<std::string> columns;
    for (const auto& [_, row] : cells)
        for (const auto& [col, _m] : row) columns.insert(col);

    std::string out(corner);
    for (const auto& c : columns) out += "," + c;
    out += ",Overall\n";

    std::map<std::string, Mean> column_means;
    Mean grand;
    for (const auto& [row_name, row] : cells) {
        out += row_name;
        Mean row_mean;
        for (const auto& c : columns) {
            auto it = row.find(c);
            if (it == row.end() || it->second.n == 0) {
                out += ",NA";
                continue;
            }
            double v = it->second.value();
            out += "," + text::fixed(v, kDecimals);
            row_mean.add(v);
            column_means[c].add(v);
            grand.add(v);
        }
        out += "," + (row_mean.n ? text::fixed(row_mean.value(), kDecimals) : std::string("NA")) + "\n";
    }
    out += "Overall";
    for (const auto& c : columns) {
        auto it = column_means.find(c);
        out += "," + (it != column_means.end() ? text::fixed(it->second.value(), kDecimals) : std::string("NA"));
    }
    out += "," + (grand.n ? text::fixed(grand.value(), kDecimals) : std::string("NA")) + "\n";
    return out;
}

std::string file_safe(std::string s) {
    std::replace(s.begin(), s.end(), ':', '-');
    return s;
}

} // namespace

TableSet aggregate_tables(const std::vector<ExperimentResult>& records) {
    TableSet out;
    for (const auto& label : scenario_order(records)) {
        std::map<std::string, std::map<std::string, Mean>> mse_cm, acc_cm, mse_mc;
        std::map<std::string, std::pair<Mean, Mean>> baseline;
        for (const auto& r : records) {
            if (r.key.scenario != label) continue;
            if (r.key.metric == kTrainingBaseline) {
                baseline[r.key.centrality].first.add(r.mse);
                baseline[r.key.centrality].second.add(r.overlap);
                continue;
            }
            mse_cm[r.key.centrality][r.key.metric].add(r.mse);
            acc_cm[r.key.centrality][r.key.metric].add(r.overlap);
            mse_mc[r.key.metric][r.key.contagion].add(r.mse);
        }
        if (!mse_cm.empty()) {
            out.files["mse_centrality_metric_" + label + ".csv"] = pivot("Centrality", mse_cm);
            out.files["accuracy_centrality_metric_" + label + ".csv"] = pivot("Centrality", acc_cm);
            out.files["mse_metric_contagion_" + label + ".csv"] = pivot("Metric", mse_mc);
        }
        if (!baseline.empty()) {
            std::string csv = "Centrality,MSE,Accuracy\n";
            Mean mse_all, acc_all;
            for (const auto& [c, m] : baseline) {
                csv += c + "," + text::fixed(m.first.value(), kDecimals) + "," + text::fixed(m.second.value(), kDecimals) +
                       "\n";
                mse_all.add(m.first.value());
                acc_all.add(m.second.value());
            }
            csv += "Overall," + text::fixed(mse_all.value(), kDecimals) + "," + text::fixed(acc_all.value(), kDecimals) +
                   "\n";
            out.files["training_baseline_" + label + ".csv"] = std::move(csv);
        }
    }
    return out;
}

// --- curves -----------------------------------------------------------------

namespace {

struct CurveMean {
    std::vector<double> sum;
    std::size_t n = 0;

    void add(const SpreadCurve& c) {
        if (sum.empty()) sum.assign(c.fractions.size(), 0.0);
        if (c.fractions.size() != sum.size()) throw Error(ErrorCode::InvalidArgument, "curves of different length");
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c.fractions[i];
        ++n;
    }
    double at(std::size_t t) const { return sum[t] / static_cast<double>(n); }
};

std::string curve_csv(const CurveMean& m) {
    std::string out = "time,mean_fraction\n";
    for (std::size_t t = 0; t < m.sum.size(); ++t) out += std::to_string(t) + "," + text::fixed(m.at(t), kDecimals) + "\n";
    return out;
}

} // namespace

CurveSet emit_curves(const std::vector<ExperimentResult>& records) {
    using Group = std::tuple<std::string, std::string, std::string>;  // scenario, contagion, algorithm
    std::map<Group, CurveMean> overall, original;
    std::map<std::tuple<std::string, std::string, std::string, std::string>, CurveMean> per_metric;
    std::map<std::tuple<std::string, std::string, std::string, std::string, std::string>, CurveMean> per_centrality;

    for (const auto& r : records) {
        const auto& k = r.key;
        Group g{k.scenario, k.contagion, k.algorithm};
        per_metric[{k.scenario, k.contagion, k.algorithm, k.metric}].add(r.predicted);
        per_centrality[{k.scenario, k.contagion, k.algorithm, k.metric, k.centrality}].add(r.predicted);
        if (k.metric == kTrainingBaseline) continue;
        overall[g].add(r.predicted);
        original[g].add(r.observed);
        per_centrality[{k.scenario, k.contagion, k.algorithm, std::string(kOriginalSeries), k.centrality}].add(
            r.observed);
    }

    CurveSet out;
    auto stem = [](const std::string& s, const std::string& c, const std::string& a) {
        return s + "_" + c + "_" + file_safe(a);
    };
    for (const auto& [g, m] : overall) {
        const auto& [s, c, a] = g;
        out.files[stem(s, c, a) + ".csv"] = curve_csv(m);
        out.files[stem(s, c, a) + "_" + std::string(kOriginalSeries) + ".csv"] = curve_csv(original.at(g));
    }
    for (const auto& [g, m] : per_metric) {
        const auto& [s, c, a, metric] = g;
        out.files[stem(s, c, a) + "_" + metric + ".csv"] = curve_csv(m);
    }
    if (!per_centrality.empty()) {
        std::string csv = "scenario,contagion,algorithm,series,centrality,time,mean_fraction\n";
        for (const auto& [g, m] : per_centrality) {
            const auto& [s, c, a, series, centrality] = g;
            for (std::size_t t = 0; t < m.sum.size(); ++t)
                csv += s + "," + c + "," + a + "," + series + "," + centrality + "," + std::to_string(t) + "," +
                       text::fixed(m.at(t), kDecimals) + "\n";
        }
        out.files["by_centrality.csv"] = std::move(csv);
    }
    return out;
}

// --- manifest and files -----------------------------------------------------

std::string manifest_json(const ExperimentConfig& cfg, const DatasetSummary& dataset, const GridOutput& grid) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["seed"] = cfg.seed;
    nlohmann::ordered_json config;
    for (const auto& [k, v] : describe(cfg)) config[k] = v;
    j["config"] = config;
    j["dataset"] = {{"nodes", dataset.nodes},
                    {"edges", dataset.edges},
                    {"self_loops_dropped", dataset.self_loops_dropped},
                    {"duplicates_collapsed", dataset.duplicates_collapsed}};
    auto scen = nlohmann::ordered_json::array();
    for (const auto& s : scenarios(cfg))
        scen.push_back({{"label", s.label}, {"fraction", s.fraction}, {"horizon", s.horizon}});
    j["scenarios"] = scen;
    std::size_t baseline = 0;
    for (const auto& r : grid.records) baseline += r.key.metric == kTrainingBaseline;
    j["records"] = grid.records.size() - baseline;
    j["expected_records"] = grid.expected_records;
    j["baseline_records"] = baseline;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : grid.failures) failures.push_back({{"cell", f.cell}, {"error", f.message}});
    j["failures"] = failures;
    return j.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << contents;
    if (!out) throw Error(ErrorCode::Io, "error writing " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void make_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
}

template <typename Files>
void write_set(const std::filesystem::path& dir, const Files& files) {
    make_dir(dir);
    for (const auto& [name, contents] : files) write_file(dir / name, contents);
}

} // namespace

void write_outputs(const std::filesystem::path& dir, const ExperimentConfig& cfg, const DatasetSummary& dataset,
                   const GridOutput& grid) {
    make_dir(dir);
    write_file(dir / "results.csv", results_csv(grid.records));
    write_file(dir / "curve_records.csv", curve_records_csv(grid.records));
    write_set(dir / "tables", aggregate_tables(grid.records).files);
    write_set(dir / "curves", emit_curves(grid.records).files);
    write_file(dir / "run.json", manifest_json(cfg, dataset, grid));
}

void rebuild_tables(const std::filesystem::path& dir) {
    auto records = parse_results_csv(read_file(dir / "results.csv"));
    write_set(dir / "tables", aggregate_tables(records).files);
}

void rebuild_curves(const std::filesystem::path& dir) {
    auto records = parse_curve_records_csv(read_file(dir / "curve_records.csv"));
    write_set(dir / "curves", emit_curves(records).files);
}

RunSummary run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress) {
    validate(cfg);
    if (cfg.input_path.empty()) throw Error(ErrorCode::InvalidArgument, "no input graph given");
    std::filesystem::path dir = cfg.output_dir;
    if (const char* env = std::getenv("SSM_OUTPUT_DIR"); env && *env) dir = env;

    auto report = load_graph(cfg.input_path, cfg.input_format, cfg.default_weight);
    DatasetSummary dataset{report.graph.node_count(), report.graph.edge_count(), report.self_loops_dropped,
                           report.duplicates_collapsed};
    if (progress)
        progress("loaded " + cfg.input_path + ": " + std::to_string(dataset.nodes) + " nodes, " +
                 std::to_string(dataset.edges) + " edges");
    auto grid = run_grid(cfg, report.graph, progress);
    write_outputs(dir, cfg, dataset, grid);
    return {grid.records.size(), grid.failures.size(), dir};
}

} // namespace ssm
