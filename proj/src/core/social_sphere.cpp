#include "core/social_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "core/error.hpp"
#include "core/text.hpp"

namespace ssm {

namespace {

bool edge_less(const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; }

std::vector<std::string> copy_labels(const Graph& g) { return {g.labels().begin(), g.labels().end()}; }

} // namespace

PredictedGraph::PredictedGraph(Graph graph, std::vector<Edge> predicted)
    : graph_(std::move(graph)), predicted_(std::move(predicted)) {
    for (auto& e : predicted_)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(predicted_.begin(), predicted_.end(), edge_less);
}

PredictedGraph PredictedGraph::observed_only(Graph graph) { return PredictedGraph(std::move(graph), {}); }

EdgeOrigin PredictedGraph::origin(NodeId u, NodeId v) const {
    if (!graph_.adjacent(u, v))
        throw Error(ErrorCode::NotFound,
                    "(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
    Edge key{std::min(u, v), std::max(u, v), 0.0};
    return std::binary_search(predicted_.begin(), predicted_.end(), key, edge_less) ? EdgeOrigin::Predicted
                                                                                     : EdgeOrigin::Observed;
}

Graph PredictedGraph::observed_graph() const {
    std::vector<Edge> kept;
    for (const Edge& e : graph_.edges())
        if (!std::binary_search(predicted_.begin(), predicted_.end(), e, edge_less)) kept.push_back(e);
    return Graph::from_edges(graph_.node_count(), kept, copy_labels(graph_));
}

double predicted_edge_weight(double probability, Horizon horizon) {
    if (!(probability > 0.0 && probability <= 1.0))
        throw Error(ErrorCode::Range, "edge probability must lie in (0,1], got " + text::shortest(probability));
    if (horizon.steps == 0) throw Error(ErrorCode::Range, "prediction horizon must be at least 1");
    // 1 - exp(t*log(1-p)), accurate for small p.
    return -std::expm1(static_cast<double>(horizon.steps) * std::log1p(-probability));
}

PredictedGraph build_predicted_graph(const Graph& train, std::span<const PairScore> normalized, Horizon horizon) {
    if (horizon.steps == 0 || normalized.empty()) return PredictedGraph::observed_only(train);

    auto edges = train.edges();
    std::vector<Edge> predicted;
    predicted.reserve(normalized.size());
    for (const PairScore& p : normalized) {
        if (train.adjacent(p.u, p.v))
            throw Error(ErrorCode::InvalidArgument, "stale score: pair (" + std::to_string(p.u) + ", " +
                                                        std::to_string(p.v) + ") is already a training edge");
        predicted.push_back({std::min(p.u, p.v), std::max(p.u, p.v), predicted_edge_weight(p.score, horizon)});
    }
    edges.insert(edges.end(), predicted.begin(), predicted.end());
    auto graph = Graph::from_edges(train.node_count(), edges, copy_labels(train));
    return PredictedGraph(std::move(graph), std::move(predicted));
}

void write_predicted_graph(std::ostream& out, const PredictedGraph& pg) {
    const Graph& g = pg.graph();
    out << "# u v w origin\n";
    for (const Edge& e : g.edges()) {
        auto tag = pg.origin(e.u, e.v) == EdgeOrigin::Predicted ? "predicted" : "observed";
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << text::shortest(e.weight) << ' ' << tag << '\n';
    }
}

} // namespace ssm
