#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace ssm {

enum class MetricId {
    CommonNeighbors,
    Jaccard,
    ResourceAllocation,
    RA2,
    LocalPath,
    QuasiLocalRA,
    QuasiLocalRA2,
};

inline constexpr std::array kAllMetrics = {
    MetricId::CommonNeighbors, MetricId::Jaccard,      MetricId::ResourceAllocation, MetricId::RA2,
    MetricId::LocalPath,       MetricId::QuasiLocalRA, MetricId::QuasiLocalRA2,
};

std::string_view to_string(MetricId m);
MetricId parse_metric(std::string_view name);

/// True for metrics that look past common neighbours (length-3 paths).
bool uses_three_hop_paths(MetricId m);

struct LinkPredictionParams {
    double local_path_epsilon = 0.01;
    double quasi_local_epsilon = 0.01;
    /// Use strength s_x instead of |N(x)| in the RA-family penalties.
    bool weighted = false;
};

enum class QuasiLocalBase { RA, RA2 };

// Pairwise scores. All require u != v and (u,v) not an edge.
std::size_t score_common_neighbors(const Graph& g, NodeId u, NodeId v);
double score_jaccard(const Graph& g, NodeId u, NodeId v);
double score_resource_allocation(const Graph& g, NodeId u, NodeId v, bool weighted = false);
double score_ra2(const Graph& g, NodeId u, NodeId v, bool weighted = false);
double score_local_path(const Graph& g, NodeId u, NodeId v, double epsilon);
double score_quasi_local(const Graph& g, NodeId u, NodeId v, QuasiLocalBase base, double epsilon,
                         bool weighted = false);

double score_pair(const Graph& g, MetricId metric, NodeId u, NodeId v,
                  const LinkPredictionParams& params = {});

struct PairScore {
    NodeId u;  // u < v
    NodeId v;
    double score;
};

/// Non-adjacent pairs a metric can score: pairs sharing a common neighbour, or
/// for path metrics pairs within three hops. Sorted by (u, v).
std::vector<std::pair<NodeId, NodeId>> candidate_pairs(const Graph& g, MetricId metric);

struct SimilarityScores {
    MetricId metric;
    std::vector<PairScore> raw;         // positive raw scores, sorted by (u, v)
    std::vector<PairScore> normalized;  // probabilities in (0, cap]
};

/// Raw scores for every candidate pair with a positive score.
std::vector<PairScore> score_all(const Graph& g, MetricId metric, const LinkPredictionParams& params = {});

/// p = cap * raw / max(raw); zero entries dropped.
std::vector<PairScore> normalize(std::span<const PairScore> raw, double cap = 1.0);

SimilarityScores similarity_scores(const Graph& g, MetricId metric, const LinkPredictionParams& params = {},
                                   double cap = 1.0);

} // namespace ssm
