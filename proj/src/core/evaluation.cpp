#include "core/evaluation.hpp"

#include <algorithm>
#include <unordered_set>

#include "core/error.hpp"

namespace ssm {

double mse(const SpreadCurve& predicted, const SpreadCurve& observed) {
    const auto& p = predicted.fractions;
    const auto& o = observed.fractions;
    if (p.size() != o.size())
        throw Error(ErrorCode::InvalidArgument, "curve length mismatch: " + std::to_string(p.size()) + " vs " +
                                                    std::to_string(o.size()));
    if (p.size() < 2) throw Error(ErrorCode::InvalidArgument, "MSE needs a horizon of at least 1");
    double sum = 0.0;
    for (std::size_t t = 1; t < p.size(); ++t) sum += (o[t] - p[t]) * (o[t] - p[t]);
    return sum / static_cast<double>(p.size() - 1);
}

double overlap(const SeedSet& predicted, const SeedSet& truth) {
    const std::size_t k = std::max({predicted.requested_k, truth.requested_k, predicted.nodes.size(),
                                    truth.nodes.size()});
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "overlap of empty seed sets");
    std::unordered_set<NodeId> t(truth.nodes.begin(), truth.nodes.end());
    std::unordered_set<NodeId> seen;
    std::size_t common = 0;
    for (NodeId v : predicted.nodes)
        if (seen.insert(v).second && t.count(v)) ++common;
    return static_cast<double>(common) / static_cast<double>(k);
}

SeedSet ground_truth_seeds(const Graph& full, const AlgorithmId& alg, std::size_t k,
                           std::optional<CentralityId> base, const CentralityParams& params) {
    CentralityVector basis;
    if (base) basis = centrality(full, *base, params);
    return select_seeds(full, alg, k, basis);
}

CurveVerdict compare_curves(const SpreadCurve& a, const SpreadCurve& b) {
    if (a.fractions.size() != b.fractions.size())
        throw Error(ErrorCode::InvalidArgument, "curve length mismatch");
    bool above = false, below = false;
    for (std::size_t t = 0; t < a.fractions.size(); ++t) {
        if (a.fractions[t] > b.fractions[t]) above = true;
        if (a.fractions[t] < b.fractions[t]) below = true;
    }
    if (above && below) return CurveVerdict::Crossing;
    if (above) return CurveVerdict::Dominates;
    if (below) return CurveVerdict::Dominated;
    return CurveVerdict::Matches;
}

LatentInfluencerReport latent_influencer_report(const Graph& train, const Graph& full, const SeedSet& predicted,
                                                const SeedSet& truth, CentralityId base, ContagionModel model,
                                                const ComplexParams& contagion, const CentralityParams& params) {
    if (train.node_count() != full.node_count())
        throw Error(ErrorCode::InvalidArgument, "training and full graphs have different node sets");
    LatentInfluencerReport report;
    const std::size_t k = std::max(predicted.requested_k, predicted.nodes.size());
    auto ranked = rank_nodes(centrality(train, base, params));
    ranked.resize(std::min(k, ranked.size()));
    std::unordered_set<NodeId> surface(ranked.begin(), ranked.end());
    for (NodeId v : predicted.nodes)
        if (!surface.count(v)) report.latent.push_back(v);
    report.predicted_curve = simulate(full, model, predicted.nodes, contagion);
    report.truth_curve = simulate(full, model, truth.nodes, contagion);
    report.verdict = compare_curves(report.predicted_curve, report.truth_curve);
    return report;
}

} // namespace ssm
