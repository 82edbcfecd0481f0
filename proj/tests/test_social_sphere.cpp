#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "core/error.hpp"
#include "core/ingest.hpp"
#include "core/social_sphere.hpp"

using namespace ssm;

TEST_CASE("horizon-adjusted edge weight") {
    CHECK(predicted_edge_weight(0.5, Horizon{1}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(predicted_edge_weight(0.5, Horizon{3}) - 0.875) < 1e-12);
    CHECK(std::abs(predicted_edge_weight(0.2, Horizon{2}) - 0.36) < 1e-12);
    CHECK(std::abs(predicted_edge_weight(0.3, Horizon{4}) - 0.7599) < 1e-12);
    CHECK(predicted_edge_weight(1.0, Horizon{5}) == 1.0);
    CHECK(predicted_edge_weight(1e-12, Horizon{2}) == doctest::Approx(2e-12).epsilon(1e-9));

    CHECK_THROWS_AS(predicted_edge_weight(0.0, Horizon{1}), Error);
    CHECK_THROWS_AS(predicted_edge_weight(1.5, Horizon{1}), Error);
    CHECK_THROWS_AS(predicted_edge_weight(0.5, Horizon{0}), Error);
}

TEST_CASE("weight grows with the horizon") {
    for (double p : {0.01, 0.2, 0.7})
        for (unsigned t = 1; t < 10; ++t)
            CHECK(predicted_edge_weight(p, Horizon{t + 1}) >= predicted_edge_weight(p, Horizon{t}));
}

TEST_CASE("predicted graph adds scored pairs") {
    auto train = Graph::from_edges(4, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 0.5}});
    std::vector<PairScore> scores{{0, 2, 0.5}, {2, 3, 1.0}};
    auto pg = build_predicted_graph(train, scores, Horizon{3});
    CHECK(pg.graph().edge_count() == 4);
    CHECK(pg.observed_edge_count() == 2);
    CHECK(pg.predicted_edges().size() == 2);
    CHECK(pg.graph().weight(0, 2).value() == doctest::Approx(0.875));
    CHECK(pg.graph().weight(1, 2).value() == 0.5);
    CHECK(pg.origin(2, 0) == EdgeOrigin::Predicted);
    CHECK(pg.origin(1, 0) == EdgeOrigin::Observed);
    CHECK_THROWS_AS(pg.origin(0, 3), Error);
    CHECK(pg.observed_graph().edges() == train.edges());
}

TEST_CASE("degenerate inputs leave the training graph unchanged") {
    auto train = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}});
    auto none = build_predicted_graph(train, std::vector<PairScore>{}, Horizon{2});
    CHECK(none.graph().edges() == train.edges());
    CHECK(none.predicted_edges().empty());

    std::vector<PairScore> scores{{0, 2, 0.5}};
    auto zero = build_predicted_graph(train, scores, Horizon{0});
    CHECK(zero.graph().edges() == train.edges());
}

TEST_CASE("stale scores on existing edges are rejected") {
    auto train = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}});
    std::vector<PairScore> scores{{0, 1, 0.5}};
    CHECK_THROWS_AS(build_predicted_graph(train, scores, Horizon{1}), Error);
}

TEST_CASE("dump carries provenance and reparses") {
    auto train = parse_snap(std::string_view("a b\nb c\n")).graph;
    std::vector<PairScore> scores{{0, 2, 0.5}};
    auto pg = build_predicted_graph(train, scores, Horizon{1});
    std::ostringstream out;
    write_predicted_graph(out, pg);
    CHECK(out.str() == "# u v w origin\na b 1 observed\na c 0.5 predicted\nb c 1 observed\n");
    auto back = parse_weighted(std::string_view(out.str()));
    CHECK(back.graph.edge_count() == 3);
}
