// Acceptance checks that run on synthetic inputs. The criteria that need the
// GR-QC collaboration network live in acceptance_grqc.cpp.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "acceptance/grid_checks.hpp"
#include "acceptance/report.hpp"
#include "core/contagion.hpp"
#include "core/experiment.hpp"
#include "core/link_prediction.hpp"
#include "core/social_sphere.hpp"
#include "support/oracles.hpp"

using namespace ssm;
using namespace acceptance;
namespace fs = std::filesystem;

namespace {

std::vector<ExperimentResult> all_records;

void keep(const std::vector<ExperimentResult>& records) {
    all_records.insert(all_records.end(), records.begin(), records.end());
}

Graph synthetic_collaboration(std::uint64_t seed, std::size_t authors, std::size_t papers) {
    std::mt19937_64 rng(seed);
    return oracle::collaboration_graph(rng, authors, papers);
}

Verdict identity_pipeline() {
    auto g = synthetic_collaboration(11, 300, 320);
    ExperimentConfig cfg;
    cfg.fractions = {1.0};
    cfg.horizons = {0};
    cfg.trials = 2;
    cfg.k = 10;
    auto grid = run_grid(cfg, g);
    keep(grid.records);
    if (!grid.failures.empty()) return fail(grid.failures.front().cell + ": " + grid.failures.front().message);
    for (const auto& r : grid.records)
        if (r.overlap != 1.0 || r.mse != 0.0)
            return fail(describe(r.key) + " overlap=" + std::to_string(r.overlap) + " mse=" + std::to_string(r.mse));
    return pass(std::to_string(grid.records.size()) + " cells, overlap 1 and mse 0 everywhere");
}

std::set<NodeId> infected_by(const InfectionTimes& times, unsigned t) {
    std::set<NodeId> out;
    for (NodeId v = 0; v < times.size(); ++v)
        if (times[v] >= 0 && static_cast<unsigned>(times[v]) <= t) out.insert(v);
    return out;
}

Verdict contagion_oracles() {
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<int, int>> thetas = {{0, 1}, {3, 10}, {1, 2}, {1, 1}};
    const unsigned horizon = 6;
    std::size_t comparisons = 0;
    for (int graph = 0; graph < 100; ++graph) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(5, 30)(rng);
        double p = std::uniform_real_distribution<double>(0.05, 0.3)(rng);
        auto g = oracle::random_dyadic_graph(rng, n, p);
        std::vector<NodeId> all(n);
        for (NodeId v = 0; v < n; ++v) all[v] = v;
        std::shuffle(all.begin(), all.end(), rng);
        std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::vector<NodeId> seeds(all.begin(), all.begin() + k);

        auto simple_sets = oracle::simple_contagion(g, seeds, horizon);
        auto simple_times = simple_infection_times(g, seeds, horizon);
        for (unsigned t = 0; t <= horizon; ++t, ++comparisons)
            if (infected_by(simple_times, t) != simple_sets[t])
                return fail("simple contagion differs on graph " + std::to_string(graph) + " at t=" + std::to_string(t));

        for (auto [num, den] : thetas) {
            auto complex_sets = oracle::complex_contagion(g, seeds, num, den, horizon);
            auto complex_times =
                complex_infection_times(g, seeds, ComplexParams{static_cast<double>(num) / den, horizon});
            for (unsigned t = 0; t <= horizon; ++t, ++comparisons)
                if (infected_by(complex_times, t) != complex_sets[t])
                    return fail("complex contagion differs on graph " + std::to_string(graph) + " theta=" +
                                std::to_string(num) + "/" + std::to_string(den) + " t=" + std::to_string(t));
        }
    }
    return pass(std::to_string(comparisons) + " infected sets equal");
}

Verdict metric_properties() {
    std::mt19937_64 rng(77);
    std::size_t pairs = 0;
    for (int graph = 0; graph < 100; ++graph) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(6, 40)(rng);
        double p = std::uniform_real_distribution<double>(0.05, 0.35)(rng);
        auto g = oracle::random_unit_graph(rng, n, p);
        const std::string where = " on graph " + std::to_string(graph);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) {
                if (g.adjacent(u, v)) continue;
                ++pairs;
                for (MetricId m : kAllMetrics)
                    if (score_pair(g, m, u, v) != score_pair(g, m, v, u))
                        return fail(std::string(to_string(m)) + " not symmetric" + where);
                double j = score_jaccard(g, u, v);
                if (j < 0.0 || j > 1.0) return fail("Jaccard outside [0,1]" + where);
                bool all_degree_two = true;
                for (const auto& nb : g.adjacency(u))
                    if (g.adjacent(nb.node, v) && g.degree(nb.node) < 2) all_degree_two = false;
                if (all_degree_two && score_ra2(g, u, v) > score_resource_allocation(g, u, v))
                    return fail("RA2 exceeds RA" + where);
                if (score_local_path(g, u, v, 0.0) != static_cast<double>(score_common_neighbors(g, u, v)))
                    return fail("LocalPath(0) differs from CN" + where);
                if (score_quasi_local(g, u, v, QuasiLocalBase::RA, 0.0) != score_resource_allocation(g, u, v))
                    return fail("QuasiLocalRA(0) differs from RA" + where);
                if (score_quasi_local(g, u, v, QuasiLocalBase::RA2, 0.0) != score_ra2(g, u, v))
                    return fail("QuasiLocalRA2(0) differs from RA2" + where);
            }
        for (MetricId m : kAllMetrics) {
            auto raw = score_all(g, m);
            if (raw.empty()) continue;
            for (double cap : {1.0, 0.5}) {
                auto norm = normalize(raw, cap);
                auto argmax = [](const std::vector<PairScore>& s) {
                    double best = 0.0;
                    for (const auto& x : s) best = std::max(best, x.score);
                    std::set<std::pair<NodeId, NodeId>> at;
                    for (const auto& x : s)
                        if (x.score == best) at.insert({x.u, x.v});
                    return at;
                };
                if (argmax(raw) != argmax(norm)) return fail(std::string(to_string(m)) + " normalization moved argmax" + where);
            }
        }
    }
    return pass(std::to_string(pairs) + " non-adjacent pairs checked");
}

Verdict formula_spot_checks() {
    double a = predicted_edge_weight(0.5, Horizon{3});
    double b = predicted_edge_weight(0.2, Horizon{2});
    std::ostringstream msg;
    msg.precision(17);
    msg << "w(0.5,3)=" << a << " w(0.2,2)=" << b;
    if (std::abs(a - 0.875) > 1e-12 || std::abs(b - 0.36) > 1e-12) return fail(msg.str());
    return pass(msg.str());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism() {
    auto g = synthetic_collaboration(5, 200, 220);
    ExperimentConfig cfg;
    cfg.trials = 2;
    cfg.k = 8;
    cfg.metrics = {MetricId::RA2, MetricId::LocalPath, MetricId::Jaccard};
    cfg.centralities = {CentralityId::Degree, CentralityId::Betweenness, CentralityId::PageRank};
    auto base = fs::temp_directory_path() / "ssm_acceptance_determinism";
    fs::remove_all(base);
    std::string first;
    for (int run = 0; run < 2; ++run) {
        auto grid = run_grid(cfg, g);
        keep(grid.records);
        write_outputs(base / std::to_string(run), cfg, {g.node_count(), g.edge_count(), 0, 0}, grid);
    }
    auto a = slurp(base / "0" / "results.csv");
    auto b = slurp(base / "1" / "results.csv");
    fs::remove_all(base);
    if (a.empty()) return fail("results.csv is empty");
    if (a != b) return fail("results.csv differs between runs");
    return pass(std::to_string(a.size()) + " identical bytes");
}

void smoke_trend(Reporter& report) {
    auto g = synthetic_collaboration(3, 1500, 1600);
    auto cfg = smoke_grid_config();
    auto grid = run_grid(cfg, g);
    keep(grid.records);
    auto means = mean_overlap_by_fraction(grid.records);
    std::ostringstream msg;
    msg.precision(4);
    msg << "surrogate collaboration graph (" << g.node_count() << " nodes, " << g.edge_count()
        << " edges), smoke grid: mean overlap 0.9=" << means[0.9] << " vs 0.7=" << means[0.7]
        << (means[0.9] > means[0.7] ? " (direction holds)" : " (direction does not hold)")
        << "; not a substitute for the GR-QC check";
    report.info(msg.str());
}

} // namespace

int main() {
    Reporter report;
    report.run(1, "dataset fidelity", [] { return skip("needs GR-QC; see acceptance_grqc"); });
    report.run(2, "identity pipeline (synthetic graph)", identity_pipeline);
    report.run(3, "contagion oracle equivalence", contagion_oracles);
    report.run(4, "metric properties", metric_properties);
    report.run(5, "formula spot checks", formula_spot_checks);
    smoke_trend(report);
    report.run(6, "trend reproduction", [] { return skip("needs GR-QC; see acceptance_grqc"); });
    report.run(7, "determinism", determinism);
    report.run(8, "monotonicity of every emitted curve", [] { return monotone_records(all_records); });
    std::printf("%d passed, %d failed, %d skipped\n", report.passed(), report.failed(), report.skipped());
    return report.failed() == 0 ? 0 : 1;
}
