#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/centrality.hpp"
#include "core/graph.hpp"

namespace ssm {

enum class AlgorithmKind {
    KHighest,
    VoteRank,
    CentralityVoteRank,
    LIR,
    LIR2,
    GraphColoring,
    JointNomination,
};

/// Top-k selection algorithm. CentralityVoteRank carries the centrality
/// that scales each round's vote sum.
struct AlgorithmId {
    AlgorithmKind kind = AlgorithmKind::KHighest;
    CentralityId centrality = CentralityId::Degree;

    friend bool operator==(const AlgorithmId& a, const AlgorithmId& b) {
        return a.kind == b.kind && (a.kind != AlgorithmKind::CentralityVoteRank || a.centrality == b.centrality);
    }
};

/// Canonical names: KHighest, VoteRank, VoteRank:<Centrality>, LIR, LIR2,
/// GraphColoring, JointNomination.
std::string to_string(const AlgorithmId& alg);
AlgorithmId parse_algorithm(std::string_view name);

/// The six algorithms compared in the experiment grid.
std::vector<AlgorithmId> default_algorithms();

/// Centrality the algorithm consumes in a grid cell whose selection basis is
/// `cell`: the cell's centrality for KHighest, GraphColoring and
/// JointNomination; the embedded one for CentralityVoteRank; none otherwise.
std::optional<CentralityId> required_centrality(const AlgorithmId& alg, CentralityId cell);

struct SeedSet {
    std::vector<NodeId> nodes;  // selection order
    std::size_t requested_k = 0;
    bool truncated = false;  // fewer than requested_k nodes were available
};

/// Selects up to k distinct seeds. `base` is the centrality named by
/// required_centrality(); when empty, node strength is used (or the embedded
/// centrality for CentralityVoteRank).
SeedSet select_seeds(const Graph& g, const AlgorithmId& alg, std::size_t k, const CentralityVector& base = {});

SeedSet k_highest(const CentralityVector& base, std::size_t k);
/// Plain VoteRank when `scale` is empty; otherwise each round's vote sum is
/// multiplied by the min-max normalized scale.
SeedSet voterank(const Graph& g, std::size_t k, const CentralityVector& scale = {});
/// Local index: number of neighbours (hops <= radius) with strictly larger degree.
std::vector<std::size_t> local_index(const Graph& g, unsigned radius);
SeedSet lir(const Graph& g, std::size_t k, unsigned radius);
/// Greedy colouring in descending-degree order; colour per node.
std::vector<unsigned> greedy_coloring(const Graph& g);
SeedSet graph_coloring(const Graph& g, std::size_t k, const CentralityVector& base);
SeedSet joint_nomination(const Graph& g, std::size_t k, const CentralityVector& base);

} // namespace ssm
