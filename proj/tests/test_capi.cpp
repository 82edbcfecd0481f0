#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "ssm/ssm.h"

namespace fs = std::filesystem;

namespace {

struct Graph {
    ssm_graph* g = nullptr;
    ~Graph() { ssm_graph_free(g); }
};

const char* kRing =
    "# ring of six with one chord\n"
    "1\t2\n2\t3\n3\t4\n4\t5\n5\t6\n6\t1\n1\t4\n";

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(ssm_version()) == "0.1.0");
    CHECK(std::string(ssm_status_name(SSM_OK)) == "ok");
    CHECK(std::string(ssm_status_name(SSM_ERR_CONVERGENCE)) == "did not converge");
}

TEST_CASE("parse, inspect and save") {
    Graph h;
    REQUIRE(ssm_graph_parse("# c\n1\t2\n2\t1\n2\t3\n3\t3\n", "snap", 1.0, &h.g) == SSM_OK);
    CHECK(ssm_graph_node_count(h.g) == 3);
    CHECK(ssm_graph_edge_count(h.g) == 2);
    CHECK(ssm_graph_self_loops_dropped(h.g) == 1);
    CHECK(ssm_graph_duplicates_collapsed(h.g) == 1);
    char buf[8];
    REQUIRE(ssm_graph_label(h.g, 2, buf, sizeof buf) == SSM_OK);
    CHECK(std::string(buf) == "3");
    CHECK(ssm_graph_label(h.g, 7, buf, sizeof buf) == SSM_ERR_NOT_FOUND);

    auto path = fs::temp_directory_path() / "ssm_capi_save.txt";
    REQUIRE(ssm_graph_save(h.g, path.string().c_str(), "weighted") == SSM_OK);
    Graph back;
    REQUIRE(ssm_graph_load(path.string().c_str(), "weighted", 1.0, &back.g) == SSM_OK);
    CHECK(ssm_graph_edge_count(back.g) == 2);
    fs::remove(path);
}

TEST_CASE("errors carry a status and a message") {
    Graph h;
    CHECK(ssm_graph_parse("1 2\nbad\n", "snap", 1.0, &h.g) == SSM_ERR_PARSE);
    CHECK(std::string(ssm_last_error()).find("line 2") != std::string::npos);
    CHECK(ssm_graph_load("/nonexistent/graph.txt", "snap", 1.0, &h.g) == SSM_ERR_IO);
    CHECK(ssm_graph_parse("1 2\n", "csv", 1.0, &h.g) != SSM_OK);
    CHECK(ssm_graph_parse(nullptr, "snap", 1.0, &h.g) == SSM_ERR_INVALID_ARGUMENT);
    CHECK(h.g == nullptr);
    double w = 0;
    CHECK(ssm_predicted_edge_weight(1.5, 1, &w) != SSM_OK);
}

TEST_CASE("sample, predict, score and spread") {
    Graph full, train, predicted;
    REQUIRE(ssm_graph_parse(kRing, "snap", 1.0, &full.g) == SSM_OK);
    REQUIRE(ssm_graph_sample(full.g, 1.0, 3, &train.g) == SSM_OK);
    CHECK(ssm_graph_edge_count(train.g) == 7);
    REQUIRE(ssm_graph_predict(train.g, "CommonNeighbors", 0.5, 1, &predicted.g) == SSM_OK);
    CHECK(ssm_graph_predicted_edge_count(predicted.g) > 0);
    CHECK(ssm_graph_edge_count(predicted.g) == 7 + ssm_graph_predicted_edge_count(predicted.g));

    std::vector<double> degree(6);
    REQUIRE(ssm_centrality(full.g, "Degree", degree.data()) == SSM_OK);
    CHECK(degree == std::vector<double>{3, 2, 2, 3, 2, 2});
    CHECK(ssm_centrality(full.g, "Fame", degree.data()) != SSM_OK);

    std::vector<uint32_t> seeds(2);
    size_t count = 0;
    REQUIRE(ssm_select_seeds(full.g, "KHighest", "Degree", 2, seeds.data(), &count) == SSM_OK);
    CHECK(count == 2);
    CHECK(seeds == std::vector<uint32_t>{0, 3});

    std::vector<double> curve(3);
    REQUIRE(ssm_simulate(full.g, "simple", seeds.data(), count, 0.5, 2, curve.data()) == SSM_OK);
    CHECK(curve[0] == doctest::Approx(2.0 / 6));
    CHECK(curve[1] == doctest::Approx(1.0));

    double w = 0;
    REQUIRE(ssm_predicted_edge_weight(0.5, 3, &w) == SSM_OK);
    CHECK(w == doctest::Approx(0.875));
    double p[] = {0.0, 0.2, 0.4}, o[] = {0.0, 0.3, 0.2};
    double m = 0;
    REQUIRE(ssm_mse(p, o, 2, &m) == SSM_OK);
    CHECK(m == doctest::Approx(0.025));
}

TEST_CASE("config and experiment") {
    ssm_config* cfg = nullptr;
    REQUIRE(ssm_config_new(&cfg) == SSM_OK);
    CHECK(ssm_config_set(cfg, "experiment.trials", "2") == SSM_OK);
    char buf[64];
    REQUIRE(ssm_config_get(cfg, "experiment.trials", buf, sizeof buf) == SSM_OK);
    CHECK(std::string(buf) == "2");
    CHECK(ssm_config_set(cfg, "experiment.nonsense", "1") != SSM_OK);
    CHECK(ssm_config_get(cfg, "experiment.nonsense", buf, sizeof buf) == SSM_ERR_NOT_FOUND);

    auto dir = fs::temp_directory_path() / "ssm_capi_run";
    auto input = fs::temp_directory_path() / "ssm_capi_ring.txt";
    fs::remove_all(dir);
    {
        Graph h;
        REQUIRE(ssm_graph_parse(kRing, "snap", 1.0, &h.g) == SSM_OK);
        REQUIRE(ssm_graph_save(h.g, input.string().c_str(), "snap") == SSM_OK);
    }
    const std::vector<std::pair<const char*, std::string>> settings = {
        {"input.path", input.string()},     {"experiment.output", dir.string()},
        {"experiment.k", "1"}, {"experiment.trials", "2"},{"experiment.metrics", "CommonNeighbors"},
        {"experiment.centralities", "Degree"}, {"experiment.algorithms", "KHighest"},
        {"experiment.fractions", "0.8"},    {"experiment.horizons", "1"},
    };
    for (const auto& [k, v] : settings) REQUIRE(ssm_config_set(cfg, k, v.c_str()) == SSM_OK);

    int calls = 0;
    ssm_run_summary summary{};
    auto progress = [](const char*, void* user) { ++*static_cast<int*>(user); };
    REQUIRE(ssm_run_experiment(cfg, progress, &calls, &summary) == SSM_OK);
    CHECK(calls > 0);
    CHECK(summary.failures == 0);
    CHECK(summary.records == 2 * 2 * 2);
    CHECK(fs::exists(dir / "results.csv"));

    fs::remove_all(dir / "tables");
    REQUIRE(ssm_write_tables(dir.string().c_str()) == SSM_OK);
    CHECK(fs::exists(dir / "tables"));
    REQUIRE(ssm_write_curves(dir.string().c_str()) == SSM_OK);
    CHECK(ssm_write_tables("/nonexistent/run") != SSM_OK);

    CHECK(ssm_config_set(cfg, "experiment.centralities", "PageRank") == SSM_OK);
    CHECK(ssm_config_set(cfg, "centrality.max_iterations", "1") == SSM_OK);
    CHECK(ssm_run_experiment(cfg, nullptr, nullptr, &summary) == SSM_ERR_PARTIAL);
    CHECK(summary.failures > 0);

    ssm_config_free(cfg);
    fs::remove_all(dir);
    fs::remove(input);
}
