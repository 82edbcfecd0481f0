#pragma once

#include <optional>
#include <vector>

#include "core/centrality.hpp"
#include "core/contagion.hpp"
#include "core/graph.hpp"
#include "core/seed_selection.hpp"

namespace ssm {

/// (1/r) * sum_{t=1..r} (O(t) - P(t))^2; the t = 0 point is excluded.
double mse(const SpreadCurve& predicted, const SpreadCurve& observed);

/// |pred ∩ truth| / k, k being the larger requested size of the two.
double overlap(const SeedSet& predicted, const SeedSet& truth);

/// The same algorithm (and centrality, if any) applied to the full graph.
SeedSet ground_truth_seeds(const Graph& full, const AlgorithmId& alg, std::size_t k,
                           std::optional<CentralityId> base, const CentralityParams& params = {});

enum class CurveVerdict {
    Dominates,  // pointwise >= with at least one strict >
    Matches,    // equal at every t
    Dominated,
    Crossing,
};

CurveVerdict compare_curves(const SpreadCurve& a, const SpreadCurve& b);

struct LatentInfluencerReport {
    /// Predicted seeds outside the training graph's top-k under the base centrality.
    std::vector<NodeId> latent;
    SpreadCurve predicted_curve;
    SpreadCurve truth_curve;
    CurveVerdict verdict = CurveVerdict::Matches;

    bool dominates() const { return verdict == CurveVerdict::Dominates; }
};

LatentInfluencerReport latent_influencer_report(const Graph& train, const Graph& full, const SeedSet& predicted,
                                                const SeedSet& truth, CentralityId base, ContagionModel model,
                                                const ComplexParams& contagion = {},
                                                const CentralityParams& params = {});

} // namespace ssm
