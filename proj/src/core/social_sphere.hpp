#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "core/graph.hpp"
#include "core/link_prediction.hpp"

namespace ssm {

/// Number of future unit intervals over which a predicted edge may form.
/// Zero is the degenerate "no prediction" horizon.
struct Horizon {
    unsigned steps = 1;
};

enum class EdgeOrigin { Observed, Predicted };

/// Training graph plus predicted edges, with per-edge provenance.
class PredictedGraph {
public:
    PredictedGraph() = default;
    PredictedGraph(Graph graph, std::vector<Edge> predicted);

    /// A graph with no predicted edges.
    static PredictedGraph observed_only(Graph graph);

    const Graph& graph() const { return graph_; }
    std::span<const Edge> predicted_edges() const { return predicted_; }
    std::size_t observed_edge_count() const { return graph_.edge_count() - predicted_.size(); }

    /// Throws NotFound if (u, v) is not an edge.
    EdgeOrigin origin(NodeId u, NodeId v) const;

    /// Strips predicted edges, recovering the training graph.
    Graph observed_graph() const;

private:
    Graph graph_;
    std::vector<Edge> predicted_;  // sorted by (u, v)
};

/// w_t = 1 - (1 - p)^t for p in (0,1], t >= 1.
double predicted_edge_weight(double probability, Horizon horizon);

/// Adds one edge per normalized score with weight w_t. Observed edges keep
/// their weight. Scores on pairs already adjacent in `train` are rejected.
PredictedGraph build_predicted_graph(const Graph& train, std::span<const PairScore> normalized,
                                     Horizon horizon);

/// Weighted edge list with a trailing provenance column.
void write_predicted_graph(std::ostream& out, const PredictedGraph& pg);

} // namespace ssm
