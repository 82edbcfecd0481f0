#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "core/error.hpp"
#include "core/link_prediction.hpp"
#include "support/oracles.hpp"

using namespace ssm;

namespace {

Graph graph(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

// u=0, v=1
Graph k4_minus_uv() { return graph(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}); }
Graph path_uxv() { return graph(3, {{0, 2, 1}, {1, 2, 1}}); }

} // namespace

TEST_CASE("common neighbours") {
    CHECK(score_common_neighbors(path_uxv(), 0, 1) == 1);
    CHECK(score_common_neighbors(graph(4, {{0, 2, 1}, {1, 3, 1}}), 0, 1) == 0);
    CHECK(score_common_neighbors(k4_minus_uv(), 0, 1) == 2);
}

TEST_CASE("jaccard") {
    CHECK(score_jaccard(k4_minus_uv(), 0, 1) == 1.0);
    CHECK(score_jaccard(path_uxv(), 0, 1) == 1.0);
    CHECK(score_jaccard(graph(4, {{0, 2, 1}, {1, 3, 1}}), 0, 1) == 0.0);
    CHECK(score_jaccard(graph(4, {{0, 2, 1}, {1, 2, 1}, {1, 3, 1}}), 0, 1) == doctest::Approx(0.5));
}

TEST_CASE("resource allocation and RA-2") {
    // x = 2 with degree 4
    auto one = graph(5, {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}});
    CHECK(score_resource_allocation(one, 0, 1) == 0.25);
    CHECK(score_ra2(one, 0, 1) == 0.125);
    CHECK(score_ra2(path_uxv(), 0, 1) == 0.5);

    // common neighbours 2 (degree 2) and 3 (degree 4)
    auto two = graph(6, {{0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}, {3, 4, 1}, {3, 5, 1}});
    CHECK(score_resource_allocation(two, 0, 1) == 0.75);
    CHECK(score_resource_allocation(graph(4, {{0, 2, 1}, {1, 3, 1}}), 0, 1) == 0.0);
}

TEST_CASE("weighted RA uses strength") {
    auto g = graph(3, {{0, 2, 0.5}, {1, 2, 0.25}});
    CHECK(score_resource_allocation(g, 0, 1, true) == doctest::Approx(1.0 / 0.75));
    CHECK(score_ra2(g, 0, 1, true) == doctest::Approx(2.0 / (0.75 * 0.75)));
}

TEST_CASE("local path") {
    // u-a-v and u-b-c-v
    auto g = graph(5, {{0, 2, 1}, {2, 1, 1}, {0, 3, 1}, {3, 4, 1}, {4, 1, 1}});
    CHECK(score_local_path(g, 0, 1, 0.01) == doctest::Approx(1.01));
    CHECK(score_local_path(g, 0, 1, 0.0) == 1.0);
}

TEST_CASE("quasi-local") {
    // u-x-y-v, degrees of x and y are 2
    auto g = graph(4, {{0, 2, 1}, {2, 3, 1}, {3, 1, 1}});
    CHECK(score_quasi_local(g, 0, 1, QuasiLocalBase::RA, 0.1) == doctest::Approx(0.025));
    CHECK(score_quasi_local(g, 0, 1, QuasiLocalBase::RA, 0.0) == 0.0);
    // no length-3 paths: equals the base
    auto one = graph(5, {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}});
    CHECK(score_quasi_local(one, 0, 1, QuasiLocalBase::RA2, 0.5) == score_ra2(one, 0, 1));
}

TEST_CASE("pair scoring preconditions") {
    auto g = path_uxv();
    CHECK_THROWS_AS(score_common_neighbors(g, 0, 0), Error);
    CHECK_THROWS_AS(score_jaccard(g, 0, 2), Error);
    CHECK_THROWS_AS(score_ra2(g, 0, 7), Error);
}

TEST_CASE("normalization") {
    std::vector<PairScore> raw{{0, 1, 2.0}, {0, 2, 4.0}};
    auto p = normalize(raw, 1.0);
    REQUIRE(p.size() == 2);
    CHECK(p[0].score == 0.5);
    CHECK(p[1].score == 1.0);

    std::vector<PairScore> single{{3, 4, 7.0}};
    CHECK(normalize(single, 1.0)[0].score == 1.0);
    std::vector<PairScore> four{{3, 4, 4.0}};
    CHECK(normalize(four, 0.95)[0].score == 0.95);

    CHECK(normalize(std::vector<PairScore>{}, 1.0).empty());
    CHECK_THROWS_AS(normalize(raw, 0.0), Error);
    CHECK_THROWS_AS(normalize(raw, 1.5), Error);
}

TEST_CASE("candidate pairs") {
    auto triangle = graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    CHECK(candidate_pairs(triangle, MetricId::CommonNeighbors).empty());
    auto path = graph(3, {{0, 1, 1}, {1, 2, 1}});
    auto pairs = candidate_pairs(path, MetricId::CommonNeighbors);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<NodeId, NodeId>{0, 2});
}

TEST_CASE("candidate pairs match an exhaustive scan") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_unit_graph(rng, 20, 0.12);
        auto a = oracle::adjacency_matrix(g);
        auto a2 = oracle::multiply(a, a);
        auto a3 = oracle::multiply(a2, a);
        std::vector<std::pair<NodeId, NodeId>> two_hop, three_hop;
        for (NodeId u = 0; u < 20; ++u)
            for (NodeId v = u + 1; v < 20; ++v) {
                if (g.adjacent(u, v)) continue;
                if (a2[u][v] > 0) two_hop.emplace_back(u, v);
                if (a2[u][v] > 0 || a3[u][v] > 0) three_hop.emplace_back(u, v);
            }
        CHECK(candidate_pairs(g, MetricId::ResourceAllocation) == two_hop);
        CHECK(candidate_pairs(g, MetricId::LocalPath) == three_hop);
    }
}

TEST_CASE("bulk scores match matrix-power counts") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_unit_graph(rng, 15, 0.25);
        const std::size_t n = g.node_count();
        auto a = oracle::adjacency_matrix(g);
        std::vector<double> ra(n, 0.0), ra2(n, 0.0);
        for (NodeId x = 0; x < n; ++x)
            if (g.degree(x) > 0) {
                ra[x] = 1.0 / static_cast<double>(g.degree(x));
                ra2[x] = 2.0 / static_cast<double>(g.degree(x) * g.degree(x));
            }
        auto a2 = oracle::multiply(a, a);
        auto a3 = oracle::multiply(a2, a);
        auto ra_walk = oracle::multiply(oracle::scale_columns(a, ra), a);
        auto ra2_walk = oracle::multiply(oracle::scale_columns(a, ra2), a);
        auto ra_ext = oracle::multiply(oracle::scale_columns(ra_walk, ra), a);
        auto ra2_ext = oracle::multiply(oracle::scale_columns(ra2_walk, ra2), a);

        auto expected = [&](MetricId m, NodeId u, NodeId v) {
            double cn = a2[u][v];
            switch (m) {
            case MetricId::CommonNeighbors: return cn;
            case MetricId::Jaccard: {
                double uni = static_cast<double>(g.degree(u) + g.degree(v)) - cn;
                return uni == 0.0 ? 0.0 : cn / uni;
            }
            case MetricId::ResourceAllocation: return ra_walk[u][v];
            case MetricId::RA2: return ra2_walk[u][v];
            case MetricId::LocalPath: return cn + 0.01 * a3[u][v];
            case MetricId::QuasiLocalRA: return ra_walk[u][v] + 0.01 * ra_ext[u][v];
            case MetricId::QuasiLocalRA2: return ra2_walk[u][v] + 0.01 * ra2_ext[u][v];
            }
            return -1.0;
        };

        for (MetricId m : kAllMetrics) {
            std::map<std::pair<NodeId, NodeId>, double> bulk;
            for (const auto& s : score_all(g, m)) bulk[{s.u, s.v}] = s.score;
            for (NodeId u = 0; u < n; ++u)
                for (NodeId v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) continue;
                    double want = expected(m, u, v);
                    double pair = score_pair(g, m, u, v);
                    CHECK(pair == doctest::Approx(want).epsilon(1e-12));
                    auto it = bulk.find({u, v});
                    if (want == 0.0) {
                        CHECK(it == bulk.end());
                    } else {
                        REQUIRE(it != bulk.end());
                        CHECK(it->second == doctest::Approx(want).epsilon(1e-12));
                    }
                }
        }
    }
}

TEST_CASE("pair scores are exactly symmetric") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 20; ++round) {
        auto g = oracle::random_graph(rng, 20, 0.3, {1.0});
        for (NodeId u = 0; u < 20; ++u)
            for (NodeId v = u + 1; v < 20; ++v) {
                if (g.adjacent(u, v)) continue;
                for (MetricId m : kAllMetrics) CHECK(score_pair(g, m, u, v) == score_pair(g, m, v, u));
            }
    }
}

TEST_CASE("metric names") {
    for (MetricId m : kAllMetrics) CHECK(parse_metric(to_string(m)) == m);
    CHECK(parse_metric("ra2") == MetricId::RA2);
    CHECK_THROWS_AS(parse_metric("Adamic"), Error);
    CHECK(uses_three_hop_paths(MetricId::QuasiLocalRA2));
    CHECK_FALSE(uses_three_hop_paths(MetricId::Jaccard));
}
