#include "core/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

#include "core/error.hpp"

namespace ssm {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
    if (node_count > std::numeric_limits<NodeId>::max())
        throw Error(ErrorCode::Range, "graph too large: " + std::to_string(node_count) + " nodes");
    if (!labels.empty() && labels.size() != node_count)
        throw Error(ErrorCode::InvalidArgument, "label count does not match node count");

    Graph g;
    g.adjacency_.resize(node_count);
    for (const Edge& e : edges) {
        if (e.u >= node_count || e.v >= node_count)
            throw Error(ErrorCode::NotFound, "edge endpoint out of range: (" + std::to_string(e.u) +
                                                 ", " + std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw Error(ErrorCode::InvalidArgument, "self-loop on node " + std::to_string(e.u));
        if (!(e.weight > 0.0 && e.weight <= 1.0))
            throw Error(ErrorCode::Range, "edge weight must lie in (0,1], got " +
                                              std::to_string(e.weight));
        g.adjacency_[e.u].push_back({e.v, e.weight});
        g.adjacency_[e.v].push_back({e.u, e.weight});
    }
    for (std::size_t v = 0; v < node_count; ++v) {
        auto& list = g.adjacency_[v];
        std::sort(list.begin(), list.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
        auto dup = std::adjacent_find(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) {
            return a.node == b.node;
        });
        if (dup != list.end())
            throw Error(ErrorCode::InvalidArgument, "parallel edge between " + std::to_string(v) +
                                                        " and " + std::to_string(dup->node));
    }
    g.strength_.resize(node_count);
    for (std::size_t v = 0; v < node_count; ++v) {
        double s = 0.0;
        for (const Neighbor& nb : g.adjacency_[v]) s += nb.weight;
        g.strength_[v] = s;
    }
    g.edge_count_ = edges.size();
    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t v = 0; v < node_count; ++v) labels.push_back(std::to_string(v));
    }
    g.labels_ = std::move(labels);
    return g;
}

void Graph::check_node(NodeId v) const {
    if (!contains(v)) throw Error(ErrorCode::NotFound, "unknown node id " + std::to_string(v));
}

std::span<const Neighbor> Graph::adjacency(NodeId v) const {
    check_node(v);
    return adjacency_[v];
}

double Graph::strength(NodeId v) const {
    check_node(v);
    return strength_[v];
}

std::optional<double> Graph::weight(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& nb, NodeId id) { return nb.node < id; });
    if (it == list.end() || it->node != v) return std::nullopt;
    return it->weight;
}

const std::string& Graph::label(NodeId v) const {
    check_node(v);
    return labels_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (const Neighbor& nb : adjacency_[u])
            if (u < nb.node) out.push_back({u, nb.node, nb.weight});
    return out;
}

double Graph::mean_degree() const {
    if (adjacency_.empty()) return 0.0;
    return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adjacency_.size());
}

std::vector<NodeId> neighbors(const Graph& g, NodeId v, unsigned order) {
    if (!g.contains(v)) throw Error(ErrorCode::NotFound, "unknown node id " + std::to_string(v));
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> frontier{v}, out;
    seen[v] = 1;
    for (unsigned d = 1; d <= order && !frontier.empty(); ++d) {
        std::vector<NodeId> next;
        for (NodeId x : frontier)
            for (const Neighbor& nb : g.adjacency(x))
                if (!seen[nb.node]) {
                    seen[nb.node] = 1;
                    next.push_back(nb.node);
                }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DegreeStrength degree_and_strength(const Graph& g, NodeId v) {
    return {g.degree(v), g.strength(v)};
}

std::vector<double> multi_source_distances(const Graph& g, std::span<const NodeId> sources,
                                           double cutoff) {
    std::vector<double> dist(g.node_count(), kUnreachable);
    using Entry = std::pair<double, NodeId>;
    // (distance, id) ordering settles equal distances by smaller id first.
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (NodeId s : sources) {
        if (!g.contains(s)) throw Error(ErrorCode::NotFound, "unknown source node " + std::to_string(s));
        if (dist[s] != 0.0) {
            dist[s] = 0.0;
            heap.emplace(0.0, s);
        }
    }
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d > dist[x]) continue;
        for (const Neighbor& nb : g.adjacency(x)) {
            double alt = d + edge_distance(nb.weight);
            if (alt > cutoff) continue;
            if (alt < dist[nb.node]) {
                dist[nb.node] = alt;
                heap.emplace(alt, nb.node);
            }
        }
    }
    return dist;
}

std::map<NodeId, double> shortest_distance(const Graph& g, NodeId source, double cutoff) {
    const NodeId src[] = {source};
    auto dist = multi_source_distances(g, src, cutoff);
    std::map<NodeId, double> out;
    for (NodeId v = 0; v < dist.size(); ++v)
        if (dist[v] != kUnreachable) out.emplace(v, dist[v]);
    return out;
}

namespace {

template <typename F>
double fold_path(const Graph& g, const Path& p, F&& per_edge) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        auto w = g.weight(p.nodes[i], p.nodes[i + 1]);
        if (!w)
            throw Error(ErrorCode::InvalidArgument, "path step " + std::to_string(p.nodes[i]) + "->" +
                                                        std::to_string(p.nodes[i + 1]) +
                                                        " is not an edge");
        total += per_edge(*w);
    }
    return total;
}

} // namespace

double total_distance(const Graph& g, const Path& p) {
    return fold_path(g, p, [](double w) { return edge_distance(w); });
}

double total_weight(const Graph& g, const Path& p) {
    return fold_path(g, p, [](double w) { return w; });
}

} // namespace ssm
