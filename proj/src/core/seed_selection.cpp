#include "core/seed_selection.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/text.hpp"

namespace ssm {

namespace {

SeedSet take_first(std::vector<NodeId> ranked, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    SeedSet s;
    s.requested_k = k;
    s.truncated = ranked.size() < k;
    ranked.resize(std::min(k, ranked.size()));
    s.nodes = std::move(ranked);
    return s;
}

void check_base(const Graph& g, const CentralityVector& base) {
    if (base.size() != g.node_count())
        throw Error(ErrorCode::InvalidArgument, "centrality vector has " + std::to_string(base.size()) +
                                                    " entries for a graph of " + std::to_string(g.node_count()) +
                                                    " nodes");
}

std::vector<NodeId> all_nodes(const Graph& g) {
    std::vector<NodeId> v(g.node_count());
    std::iota(v.begin(), v.end(), NodeId{0});
    return v;
}

} // namespace

std::string to_string(const AlgorithmId& alg) {
    switch (alg.kind) {
    case AlgorithmKind::KHighest: return "KHighest";
    case AlgorithmKind::VoteRank: return "VoteRank";
    case AlgorithmKind::CentralityVoteRank: return "VoteRank:" + std::string(to_string(alg.centrality));
    case AlgorithmKind::LIR: return "LIR";
    case AlgorithmKind::LIR2: return "LIR2";
    case AlgorithmKind::GraphColoring: return "GraphColoring";
    case AlgorithmKind::JointNomination: return "JointNomination";
    }
    throw Error(ErrorCode::Internal, "unhandled algorithm");
}

AlgorithmId parse_algorithm(std::string_view name) {
    auto colon = name.find(':');
    if (colon != std::string_view::npos) {
        if (!text::iequals(name.substr(0, colon), "VoteRank"))
            throw Error(ErrorCode::InvalidArgument, "only VoteRank takes a centrality suffix: '" + std::string(name) + "'");
        auto suffix = name.substr(colon + 1);
        if (text::iequals(suffix, "None")) return {AlgorithmKind::VoteRank};
        return {AlgorithmKind::CentralityVoteRank, parse_centrality(suffix)};
    }
    static const std::pair<std::string_view, AlgorithmKind> kNames[] = {
        {"KHighest", AlgorithmKind::KHighest},         {"VoteRank", AlgorithmKind::VoteRank},
        {"LIR", AlgorithmKind::LIR},                   {"LIR2", AlgorithmKind::LIR2},
        {"GraphColoring", AlgorithmKind::GraphColoring}, {"JointNomination", AlgorithmKind::JointNomination},
    };
    for (const auto& [label, kind] : kNames)
        if (text::iequals(name, label)) return {kind};
    throw Error(ErrorCode::InvalidArgument, "unknown top-k algorithm '" + std::string(name) + "'");
}

std::vector<AlgorithmId> default_algorithms() {
    return {{AlgorithmKind::GraphColoring}, {AlgorithmKind::JointNomination}, {AlgorithmKind::KHighest},
            {AlgorithmKind::LIR},           {AlgorithmKind::LIR2},            {AlgorithmKind::VoteRank}};
}

std::optional<CentralityId> required_centrality(const AlgorithmId& alg, CentralityId cell) {
    switch (alg.kind) {
    case AlgorithmKind::KHighest:
    case AlgorithmKind::GraphColoring:
    case AlgorithmKind::JointNomination: return cell;
    case AlgorithmKind::CentralityVoteRank: return alg.centrality;
    default: return std::nullopt;
    }
}

SeedSet k_highest(const CentralityVector& base, std::size_t k) { return take_first(rank_nodes(base), k); }

SeedSet voterank(const Graph& g, std::size_t k, const CentralityVector& scale) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    CentralityVector weight;
    if (!scale.empty()) {
        check_base(g, scale);
        weight = min_max_normalized(scale);
    }
    const std::size_t n = g.node_count();
    const double mean_degree = g.mean_degree();
    const double decrement = mean_degree > 0.0 ? 1.0 / mean_degree : 0.0;
    std::vector<double> ability(n, 1.0);
    std::vector<char> chosen(n, 0);
    std::vector<NodeId> picked;
    const std::size_t rounds = std::min(k, n);
    for (std::size_t r = 0; r < rounds; ++r) {
        NodeId best = 0;
        double best_score = -1.0;
        for (NodeId v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            double votes = 0.0;
            for (const Neighbor& nb : g.adjacency(v)) votes += ability[nb.node];
            if (!weight.empty()) votes *= weight[v];
            if (votes > best_score) {
                best_score = votes;
                best = v;
            }
        }
        chosen[best] = 1;
        picked.push_back(best);
        ability[best] = 0.0;
        for (const Neighbor& nb : g.adjacency(best)) ability[nb.node] = std::max(0.0, ability[nb.node] - decrement);
    }
    return take_first(std::move(picked), k);
}

std::vector<std::size_t> local_index(const Graph& g, unsigned radius) {
    std::vector<std::size_t> li(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::size_t kv = g.degree(v);
        if (radius == 1) {
            for (const Neighbor& nb : g.adjacency(v))
                if (g.degree(nb.node) > kv) ++li[v];
        } else {
            for (NodeId u : neighbors(g, v, radius))
                if (g.degree(u) > kv) ++li[v];
        }
    }
    return li;
}

SeedSet lir(const Graph& g, std::size_t k, unsigned radius) {
    auto li = local_index(g, radius);
    auto order = all_nodes(g);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (li[a] != li[b]) return li[a] < li[b];
        return g.degree(a) > g.degree(b);
    });
    return take_first(std::move(order), k);
}

std::vector<unsigned> greedy_coloring(const Graph& g) {
    auto order = all_nodes(g);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    constexpr unsigned kUncolored = ~0u;
    std::vector<unsigned> color(g.node_count(), kUncolored);
    std::vector<NodeId> used_by(g.node_count() + 1, 0);  // colour -> last node (+1) that saw it
    for (NodeId v : order) {
        for (const Neighbor& nb : g.adjacency(v))
            if (color[nb.node] != kUncolored) used_by[color[nb.node]] = v + 1;
        unsigned c = 0;
        while (used_by[c] == v + 1) ++c;
        color[v] = c;
    }
    return color;
}

SeedSet graph_coloring(const Graph& g, std::size_t k, const CentralityVector& base) {
    check_base(g, base);
    auto color = greedy_coloring(g);
    unsigned colors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<NodeId>> classes(colors);
    for (NodeId v = 0; v < color.size(); ++v) classes[color[v]].push_back(v);
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<NodeId> ranked;
    ranked.reserve(g.node_count());
    for (auto& cls : classes) {
        std::stable_sort(cls.begin(), cls.end(), [&](NodeId a, NodeId b) { return base[a] > base[b]; });
        ranked.insert(ranked.end(), cls.begin(), cls.end());
    }
    return take_first(std::move(ranked), k);
}

SeedSet joint_nomination(const Graph& g, std::size_t k, const CentralityVector& base) {
    check_base(g, base);
    std::vector<std::size_t> nominations(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto adj = g.adjacency(v);
        if (adj.empty()) continue;
        NodeId pick = adj.front().node;
        for (const Neighbor& nb : adj)
            if (base[nb.node] > base[pick]) pick = nb.node;
        ++nominations[pick];
    }
    auto order = all_nodes(g);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (nominations[a] != nominations[b]) return nominations[a] > nominations[b];
        return base[a] > base[b];
    });
    return take_first(std::move(order), k);
}

SeedSet select_seeds(const Graph& g, const AlgorithmId& alg, std::size_t k, const CentralityVector& base) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    CentralityVector fallback;
    if (base.empty())
        fallback = alg.kind == AlgorithmKind::CentralityVoteRank ? centrality(g, alg.centrality) : strength_centrality(g);
    const CentralityVector& basis = base.empty() ? fallback : base;
    switch (alg.kind) {
    case AlgorithmKind::KHighest: check_base(g, basis); return k_highest(basis, k);
    case AlgorithmKind::VoteRank: return voterank(g, k);
    case AlgorithmKind::CentralityVoteRank: return voterank(g, k, basis);
    case AlgorithmKind::LIR: return lir(g, k, 1);
    case AlgorithmKind::LIR2: return lir(g, k, 2);
    case AlgorithmKind::GraphColoring: return graph_coloring(g, k, basis);
    case AlgorithmKind::JointNomination: return joint_nomination(g, k, basis);
    }
    throw Error(ErrorCode::Internal, "unhandled algorithm");
}

} // namespace ssm
