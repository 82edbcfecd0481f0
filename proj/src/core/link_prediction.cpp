#include "core/link_prediction.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/text.hpp"

namespace ssm {

namespace {

constexpr std::array<std::string_view, kAllMetrics.size()> kMetricNames = {
    "CommonNeighbors", "Jaccard", "ResourceAllocation", "RA2", "LocalPath", "QuasiLocalRA", "QuasiLocalRA2",
};

void require_scorable(const Graph& g, NodeId u, NodeId v) {
    if (!g.contains(u) || !g.contains(v))
        throw Error(ErrorCode::NotFound, "unknown node in pair (" + std::to_string(u) + ", " +
                                             std::to_string(v) + ")");
    if (u == v) throw Error(ErrorCode::InvalidArgument, "cannot score a node against itself");
    if (g.adjacent(u, v))
        throw Error(ErrorCode::InvalidArgument, "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                                    ") is already an edge");
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v) {
    auto a = g.adjacency(u);
    auto b = g.adjacency(v);
    std::vector<NodeId> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].node < b[j].node)
            ++i;
        else if (b[j].node < a[i].node)
            ++j;
        else {
            out.push_back(a[i].node);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Penalty each intermediate node contributes: 1/|N(x)| for RA, 2/|N(x)|^2
/// for RA-2 (strength in place of degree when weighted).
double penalty(const Graph& g, NodeId x, QuasiLocalBase base, bool weighted) {
    double size = weighted ? g.strength(x) : static_cast<double>(g.degree(x));
    return base == QuasiLocalBase::RA ? 1.0 / size : 2.0 / (size * size);
}

template <typename F>
void for_each_three_path(const Graph& g, NodeId u, NodeId v, F&& visit) {
    for (const Neighbor& x : g.adjacency(u))
        for (const Neighbor& y : g.adjacency(x.node))
            if (y.node != u && y.node != v && g.adjacent(y.node, v)) visit(x.node, y.node);
}

} // namespace

std::string_view to_string(MetricId m) { return kMetricNames[static_cast<std::size_t>(m)]; }

MetricId parse_metric(std::string_view name) {
    for (std::size_t i = 0; i < kMetricNames.size(); ++i)
        if (text::iequals(name, kMetricNames[i])) return kAllMetrics[i];
    throw Error(ErrorCode::InvalidArgument, "unknown similarity metric '" + std::string(name) + "'");
}

bool uses_three_hop_paths(MetricId m) {
    return m == MetricId::LocalPath || m == MetricId::QuasiLocalRA || m == MetricId::QuasiLocalRA2;
}

std::size_t score_common_neighbors(const Graph& g, NodeId u, NodeId v) {
    require_scorable(g, u, v);
    return common_neighbors(g, u, v).size();
}

double score_jaccard(const Graph& g, NodeId u, NodeId v) {
    require_scorable(g, u, v);
    double inter = static_cast<double>(common_neighbors(g, u, v).size());
    double uni = static_cast<double>(g.degree(u) + g.degree(v)) - inter;
    return uni == 0.0 ? 0.0 : inter / uni;
}

double score_resource_allocation(const Graph& g, NodeId u, NodeId v, bool weighted) {
    require_scorable(g, u, v);
    double s = 0.0;
    for (NodeId x : common_neighbors(g, u, v)) s += penalty(g, x, QuasiLocalBase::RA, weighted);
    return s;
}

double score_ra2(const Graph& g, NodeId u, NodeId v, bool weighted) {
    require_scorable(g, u, v);
    double s = 0.0;
    for (NodeId x : common_neighbors(g, u, v)) s += penalty(g, x, QuasiLocalBase::RA2, weighted);
    return s;
}

double score_local_path(const Graph& g, NodeId u, NodeId v, double epsilon) {
    require_scorable(g, u, v);
    double paths3 = 0.0;
    for_each_three_path(g, u, v, [&](NodeId, NodeId) { paths3 += 1.0; });
    return static_cast<double>(common_neighbors(g, u, v).size()) + epsilon * paths3;
}

double score_quasi_local(const Graph& g, NodeId u, NodeId v, QuasiLocalBase base, double epsilon,
                         bool weighted) {
    require_scorable(g, u, v);
    if (u > v) std::swap(u, v);
    double s = 0.0;
    for (NodeId x : common_neighbors(g, u, v)) s += penalty(g, x, base, weighted);
    double extended = 0.0;
    for_each_three_path(g, u, v, [&](NodeId x, NodeId y) {
        extended += penalty(g, x, base, weighted) * penalty(g, y, base, weighted);
    });
    return s + epsilon * extended;
}

double score_pair(const Graph& g, MetricId metric, NodeId u, NodeId v, const LinkPredictionParams& p) {
    switch (metric) {
    case MetricId::CommonNeighbors: return static_cast<double>(score_common_neighbors(g, u, v));
    case MetricId::Jaccard: return score_jaccard(g, u, v);
    case MetricId::ResourceAllocation: return score_resource_allocation(g, u, v, p.weighted);
    case MetricId::RA2: return score_ra2(g, u, v, p.weighted);
    case MetricId::LocalPath: return score_local_path(g, u, v, p.local_path_epsilon);
    case MetricId::QuasiLocalRA:
        return score_quasi_local(g, u, v, QuasiLocalBase::RA, p.quasi_local_epsilon, p.weighted);
    case MetricId::QuasiLocalRA2:
        return score_quasi_local(g, u, v, QuasiLocalBase::RA2, p.quasi_local_epsilon, p.weighted);
    }
    throw Error(ErrorCode::Internal, "unhandled metric");
}

namespace {

/// Per-source accumulation of all metric ingredients over pairs (u, v > u).
/// Walks u-x-y and u-x-y-z; for a non-adjacent target every such walk is a
/// simple path, so no revisit checks are needed beyond excluding u itself.
class PairAccumulator {
public:
    PairAccumulator(const Graph& g, bool three_hop, QuasiLocalBase base, bool weighted)
        : g_(g), three_hop_(three_hop), adjacent_(g.node_count(), 0), common_(g.node_count(), 0), paths3_(g.node_count(), 0),
          base_sum_(g.node_count(), 0.0), extended_sum_(g.node_count(), 0.0),
          touched_flag_(g.node_count(), 0) {
        penalty_.resize(g.node_count());
        for (NodeId x = 0; x < g.node_count(); ++x)
            penalty_[x] = g.degree(x) == 0 ? 0.0 : penalty(g, x, base, weighted);
    }

    template <typename Emit>
    void run_source(NodeId u, Emit&& emit) {
        for (const Neighbor& x : g_.adjacency(u)) adjacent_[x.node] = 1;
        for (const Neighbor& x : g_.adjacency(u)) {
            const double px = penalty_[x.node];
            for (const Neighbor& y : g_.adjacency(x.node)) {
                if (y.node == u) continue;
                if (y.node > u && !adjacent_[y.node]) {
                    touch(y.node);
                    ++common_[y.node];
                    base_sum_[y.node] += px;
                }
                if (!three_hop_) continue;
                const double pxy = px * penalty_[y.node];
                for (const Neighbor& z : g_.adjacency(y.node)) {
                    if (z.node <= u || adjacent_[z.node]) continue;
                    touch(z.node);
                    ++paths3_[z.node];
                    extended_sum_[z.node] += pxy;
                }
            }
        }
        std::sort(touched_.begin(), touched_.end());
        for (NodeId v : touched_) {
            emit(u, v, common_[v], paths3_[v], base_sum_[v], extended_sum_[v]);
            common_[v] = paths3_[v] = 0;
            base_sum_[v] = extended_sum_[v] = 0.0;
            touched_flag_[v] = 0;
        }
        touched_.clear();
        for (const Neighbor& x : g_.adjacency(u)) adjacent_[x.node] = 0;
    }

private:
    void touch(NodeId v) {
        if (!touched_flag_[v]) {
            touched_flag_[v] = 1;
            touched_.push_back(v);
        }
    }

    const Graph& g_;
    bool three_hop_;
    std::vector<char> adjacent_;
    std::vector<std::size_t> common_;
    std::vector<std::size_t> paths3_;
    std::vector<double> base_sum_;
    std::vector<double> extended_sum_;
    std::vector<char> touched_flag_;
    std::vector<double> penalty_;
    std::vector<NodeId> touched_;
};

QuasiLocalBase base_of(MetricId m) {
    return (m == MetricId::RA2 || m == MetricId::QuasiLocalRA2) ? QuasiLocalBase::RA2 : QuasiLocalBase::RA;
}

} // namespace

std::vector<std::pair<NodeId, NodeId>> candidate_pairs(const Graph& g, MetricId metric) {
    std::vector<std::pair<NodeId, NodeId>> out;
    PairAccumulator acc(g, uses_three_hop_paths(metric), QuasiLocalBase::RA, false);
    for (NodeId u = 0; u < g.node_count(); ++u)
        acc.run_source(u, [&](NodeId a, NodeId b, auto, auto, auto, auto) { out.emplace_back(a, b); });
    return out;
}

std::vector<PairScore> score_all(const Graph& g, MetricId metric, const LinkPredictionParams& params) {
    std::vector<PairScore> out;
    PairAccumulator acc(g, uses_three_hop_paths(metric), base_of(metric), params.weighted);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const double ku = static_cast<double>(g.degree(u));
        acc.run_source(u, [&](NodeId a, NodeId b, std::size_t common, std::size_t paths3, double base_sum,
                              double extended_sum) {
            double s = 0.0;
            switch (metric) {
            case MetricId::CommonNeighbors: s = static_cast<double>(common); break;
            case MetricId::Jaccard: {
                double inter = static_cast<double>(common);
                double uni = ku + static_cast<double>(g.degree(b)) - inter;
                s = uni == 0.0 ? 0.0 : inter / uni;
                break;
            }
            case MetricId::ResourceAllocation:
            case MetricId::RA2: s = base_sum; break;
            case MetricId::LocalPath:
                s = static_cast<double>(common) + params.local_path_epsilon * static_cast<double>(paths3);
                break;
            case MetricId::QuasiLocalRA:
            case MetricId::QuasiLocalRA2: s = base_sum + params.quasi_local_epsilon * extended_sum; break;
            }
            if (s > 0.0) out.push_back({a, b, s});
        });
    }
    return out;
}

std::vector<PairScore> normalize(std::span<const PairScore> raw, double cap) {
    if (!(cap > 0.0 && cap <= 1.0))
        throw Error(ErrorCode::Range, "normalization cap must lie in (0,1], got " + text::shortest(cap));
    double max = 0.0;
    for (const auto& p : raw) {
        if (p.score < 0.0) throw Error(ErrorCode::InvalidArgument, "negative similarity score");
        max = std::max(max, p.score);
    }
    std::vector<PairScore> out;
    if (max == 0.0) return out;
    out.reserve(raw.size());
    for (const auto& p : raw)
        if (p.score > 0.0) out.push_back({p.u, p.v, std::min(cap, cap * (p.score / max))});
    return out;
}

SimilarityScores similarity_scores(const Graph& g, MetricId metric, const LinkPredictionParams& params,
                                   double cap) {
    SimilarityScores s{metric, score_all(g, metric, params), {}};
    s.normalized = normalize(s.raw, cap);
    return s;
}

} // namespace ssm
