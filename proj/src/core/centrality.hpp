#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "core/contagion.hpp"
#include "core/graph.hpp"

namespace ssm {

enum class CentralityId {
    BalancedIndex,
    Betweenness,
    Closeness,
    ClusterRank,
    ComplexPathCentrality,
    Degree,
    Eigenvector,
    HIndex,
    KCore,
    LeaderRank,
    LocalRank,
    PageRank,
};

inline constexpr std::array kAllCentralities = {
    CentralityId::BalancedIndex, CentralityId::Betweenness, CentralityId::Closeness,
    CentralityId::ClusterRank,   CentralityId::ComplexPathCentrality, CentralityId::Degree,
    CentralityId::Eigenvector,   CentralityId::HIndex,      CentralityId::KCore,
    CentralityId::LeaderRank,    CentralityId::LocalRank,   CentralityId::PageRank,
};

std::string_view to_string(CentralityId c);
CentralityId parse_centrality(std::string_view name);

/// Score per node id; higher means more central.
using CentralityVector = std::vector<double>;

struct CentralityParams {
    double damping = 0.85;
    double tolerance = 1e-8;
    unsigned max_iterations = 1000;
    double balanced_lambda = 0.5;
    ComplexParams complex_path{};
    /// Worker threads for the all-sources measures; 0 = hardware concurrency.
    unsigned threads = 0;
};

CentralityVector centrality(const Graph& g, CentralityId id, const CentralityParams& params = {});

CentralityVector strength_centrality(const Graph& g);
/// Brandes accumulation under d = 1/w; undirected pairs counted once.
CentralityVector betweenness_centrality(const Graph& g, unsigned threads = 0);
/// Harmonic closeness: sum over reachable u != v of 1/D(v, u).
CentralityVector closeness_centrality(const Graph& g, unsigned threads = 0);
CentralityVector eigenvector_centrality(const Graph& g, double tolerance = 1e-8, unsigned max_iterations = 1000);
CentralityVector pagerank(const Graph& g, double damping = 0.85, double tolerance = 1e-8,
                          unsigned max_iterations = 1000);
CentralityVector leaderrank(const Graph& g, double tolerance = 1e-8, unsigned max_iterations = 1000);
CentralityVector local_clustering(const Graph& g);
CentralityVector clusterrank(const Graph& g);
CentralityVector localrank(const Graph& g);
CentralityVector h_index(const Graph& g);
std::vector<unsigned> core_numbers(const Graph& g);
CentralityVector balanced_index(const Graph& g, double lambda = 0.5);
CentralityVector complex_path_centrality(const Graph& g, const ComplexParams& params, unsigned threads = 0);

/// Rescales to [0,1]; a constant vector maps to all ones.
CentralityVector min_max_normalized(const CentralityVector& scores);

/// Node ids by descending score, ties by ascending id.
std::vector<NodeId> rank_nodes(const CentralityVector& scores);

} // namespace ssm
