#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssm {

using NodeId = std::uint32_t;

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct Neighbor {
    NodeId node;
    double weight;
};

/// Undirected edge in canonical orientation (u < v).
struct Edge {
    NodeId u;
    NodeId v;
    double weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Distance along an edge: expected waiting time of a Bernoulli process with
/// per-step success probability `weight`.
inline double edge_distance(double weight) { return 1.0 / weight; }

/// Immutable weighted undirected graph over dense ids 0..n-1.
///
/// Adjacency lists are sorted by neighbor id. Weights lie in (0,1]; there are
/// no self-loops and no parallel edges. Node labels from the input file are
/// kept for output.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from canonical or non-canonical edges. Throws on
    /// self-loops, duplicate pairs, out-of-range ids and weights outside (0,1].
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adjacency_.empty(); }

    std::span<const Neighbor> adjacency(NodeId v) const;
    std::size_t degree(NodeId v) const { return adjacency(v).size(); }
    double strength(NodeId v) const;

    bool contains(NodeId v) const { return v < adjacency_.size(); }
    std::optional<double> weight(NodeId u, NodeId v) const;
    bool adjacent(NodeId u, NodeId v) const { return weight(u, v).has_value(); }

    const std::string& label(NodeId v) const;
    std::span<const std::string> labels() const { return labels_; }

    /// All edges, canonical orientation, sorted by (u, v).
    std::vector<Edge> edges() const;

    double mean_degree() const;

private:
    void check_node(NodeId v) const;

    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> strength_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Nodes within `order` unweighted hops of v, excluding v, ascending.
std::vector<NodeId> neighbors(const Graph& g, NodeId v, unsigned order = 1);

struct DegreeStrength {
    std::size_t degree;
    double strength;
};

DegreeStrength degree_and_strength(const Graph& g, NodeId v);

/// Single-source shortest distances under d = 1/w. Nodes farther than
/// `cutoff` and unreachable nodes are omitted.
std::map<NodeId, double> shortest_distance(const Graph& g, NodeId source,
                                           double cutoff = kUnreachable);

/// Multi-source variant returning a dense vector (kUnreachable when not
/// reached within the cutoff).
std::vector<double> multi_source_distances(const Graph& g, std::span<const NodeId> sources,
                                           double cutoff = kUnreachable);

/// A walk given as its node sequence.
struct Path {
    std::vector<NodeId> nodes;

    std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// a(p): sum of edge distances. Throws if consecutive nodes are not adjacent.
double total_distance(const Graph& g, const Path& p);
/// b(p): sum of edge weights. Not used by the pipeline.
double total_weight(const Graph& g, const Path& p);

} // namespace ssm
