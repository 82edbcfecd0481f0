#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "core/error.hpp"
#include "core/seed_selection.hpp"
#include "support/oracles.hpp"

using namespace ssm;

namespace {

Graph graph(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (NodeId i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
    return graph(leaves + 1, e);
}

const AlgorithmId kKHighest{AlgorithmKind::KHighest};
const AlgorithmId kVoteRank{AlgorithmKind::VoteRank};

} // namespace

TEST_CASE("k-highest picks the hub") {
    auto s = select_seeds(star(4), kKHighest, 1, centrality(star(4), CentralityId::Degree));
    CHECK(s.nodes == std::vector<NodeId>{0});
    CHECK(k_highest({0.1, 0.3, 0.3, 0.2}, 3).nodes == std::vector<NodeId>{1, 2, 3});
}

TEST_CASE("voterank") {
    CHECK(select_seeds(star(3), kVoteRank, 1).nodes == std::vector<NodeId>{0});

    // K1,5 centred on 0 and K1,3 centred on 6
    auto g = graph(10, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {6, 7, 1}, {6, 8, 1}, {6, 9, 1}});
    CHECK(voterank(g, 2).nodes == std::vector<NodeId>{0, 6});
}

TEST_CASE("voterank differs from degree ranking on a sparse graph") {
    // Reference rounds computed independently; degree order would give 4, 7, 8.
    auto g = graph(20, {{0, 6, 1},   {0, 7, 1},   {1, 4, 1},   {1, 8, 1},   {2, 3, 1},   {2, 4, 1},
                        {3, 15, 1},  {3, 18, 1},  {4, 10, 1},  {4, 12, 1},  {5, 6, 1},   {5, 8, 1},
                        {5, 13, 1},  {7, 9, 1},   {7, 12, 1},  {7, 15, 1},  {8, 11, 1},  {8, 12, 1},
                        {9, 16, 1},  {10, 17, 1}, {12, 14, 1}, {13, 19, 1}, {16, 17, 1}});
    CHECK(voterank(g, 3).nodes == std::vector<NodeId>{4, 7, 5});
}

TEST_CASE("centrality-weighted voterank") {
    auto g = star(3);
    // A constant scale normalizes to ones: identical to plain VoteRank.
    CHECK(voterank(g, 2, {5, 5, 5, 5}).nodes == voterank(g, 2).nodes);
    // A scale that zeroes the hub moves the first pick to a leaf.
    CHECK(voterank(g, 1, {0, 1, 1, 1}).nodes == std::vector<NodeId>{1});

    AlgorithmId cvr{AlgorithmKind::CentralityVoteRank, CentralityId::Degree};
    CHECK(select_seeds(g, cvr, 1).nodes == std::vector<NodeId>{0});
}

TEST_CASE("graph colouring on a triangle with a pendant") {
    auto g = graph(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}});
    auto colors = greedy_coloring(g);
    CHECK(colors == std::vector<unsigned>{0, 1, 2, 1});
    auto s = graph_coloring(g, 2, strength_centrality(g));
    CHECK(s.nodes == std::vector<NodeId>{1, 3});
}

TEST_CASE("greedy colouring is proper") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_unit_graph(rng, 40, 0.1);
        auto colors = greedy_coloring(g);
        for (const Edge& e : g.edges()) CHECK(colors[e.u] != colors[e.v]);
    }
}

TEST_CASE("joint nomination counts neighbour votes") {
    // Leaves 1..3 nominate 0; 0 nominates its best neighbour.
    auto g = star(3);
    auto s = joint_nomination(g, 2, {10, 3, 2, 1});
    CHECK(s.nodes == std::vector<NodeId>{0, 1});
}

TEST_CASE("local index rules") {
    // 0 is the hub: LI 0. Leaves each have one larger-degree neighbour.
    auto g = star(3);
    CHECK(local_index(g, 1) == std::vector<std::size_t>{0, 1, 1, 1});
    CHECK(lir(g, 2, 1).nodes == std::vector<NodeId>{0, 1});

    // path 0-1-2-3-4: degree 2 nodes 1, 2, 3 have no larger neighbours
    auto path = graph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
    CHECK(local_index(path, 1) == std::vector<std::size_t>{1, 0, 0, 0, 1});
    CHECK(local_index(path, 2) == std::vector<std::size_t>{2, 0, 0, 0, 2});
    CHECK(lir(path, 3, 1).nodes == std::vector<NodeId>{1, 2, 3});
}

TEST_CASE("selection never repeats nodes and reports truncation") {
    std::mt19937_64 rng(2);
    auto g = oracle::random_unit_graph(rng, 30, 0.1);
    auto base = centrality(g, CentralityId::PageRank);
    for (const auto& alg : default_algorithms()) {
        CAPTURE(to_string(alg));
        auto s = select_seeds(g, alg, 10, base);
        CHECK(s.nodes.size() == 10);
        CHECK(std::set<NodeId>(s.nodes.begin(), s.nodes.end()).size() == 10);
        CHECK_FALSE(s.truncated);
        auto all = select_seeds(g, alg, 50, base);
        CHECK(all.nodes.size() == 30);
        CHECK(all.truncated);
        CHECK(all.requested_k == 50);
    }
    CHECK_THROWS_AS(select_seeds(g, kKHighest, 0, base), Error);
    CHECK_THROWS_AS(select_seeds(g, kKHighest, 3, CentralityVector(4, 1.0)), Error);
}

TEST_CASE("algorithm names and required centralities") {
    for (const auto& alg : default_algorithms()) CHECK(parse_algorithm(to_string(alg)) == alg);
    auto cvr = parse_algorithm("voterank:PageRank");
    CHECK(cvr.kind == AlgorithmKind::CentralityVoteRank);
    CHECK(cvr.centrality == CentralityId::PageRank);
    CHECK(to_string(cvr) == "VoteRank:PageRank");
    CHECK(parse_algorithm("VoteRank:None") == kVoteRank);
    CHECK_THROWS_AS(parse_algorithm("LIR:Degree"), Error);
    CHECK_THROWS_AS(parse_algorithm("Greedy"), Error);

    CHECK(required_centrality(kKHighest, CentralityId::HIndex) == CentralityId::HIndex);
    CHECK(required_centrality(kVoteRank, CentralityId::HIndex) == std::nullopt);
    CHECK(required_centrality(cvr, CentralityId::HIndex) == CentralityId::PageRank);
    CHECK(required_centrality({AlgorithmKind::LIR2}, CentralityId::Degree) == std::nullopt);
}
