#include "core/contagion.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/text.hpp"

namespace ssm {

namespace {

// Absorbs rounding in accumulated distances and weight sums.
constexpr double kSlack = 1e-9;

void check_seeds(const Graph& g, std::span<const NodeId> seeds) {
    if (seeds.empty()) throw Error(ErrorCode::InvalidArgument, "contagion needs at least one seed");
    for (NodeId s : seeds)
        if (!g.contains(s)) throw Error(ErrorCode::NotFound, "seed " + std::to_string(s) + " is not in the graph");
}

void check_horizon(unsigned horizon) {
    if (horizon == 0) throw Error(ErrorCode::Range, "contagion horizon must be at least 1");
}

} // namespace

std::string_view to_string(ContagionModel m) { return m == ContagionModel::Simple ? "simple" : "complex"; }

ContagionModel parse_contagion(std::string_view name) {
    if (text::iequals(name, "simple")) return ContagionModel::Simple;
    if (text::iequals(name, "complex")) return ContagionModel::Complex;
    throw Error(ErrorCode::InvalidArgument, "unknown contagion model '" + std::string(name) + "'");
}

InfectionTimes simple_infection_times(const Graph& g, std::span<const NodeId> seeds, unsigned horizon) {
    check_seeds(g, seeds);
    check_horizon(horizon);
    auto dist = multi_source_distances(g, seeds, static_cast<double>(horizon) + kSlack);
    InfectionTimes times(g.node_count(), -1);
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (dist[v] != kUnreachable) times[v] = static_cast<int>(std::max(0.0, std::ceil(dist[v] - kSlack)));
    return times;
}

InfectionTimes complex_infection_times(const Graph& g, std::span<const NodeId> seeds, const ComplexParams& params) {
    check_seeds(g, seeds);
    check_horizon(params.horizon);
    if (!(params.theta >= 0.0 && params.theta <= 1.0))
        throw Error(ErrorCode::Range, "theta must lie in [0,1], got " + text::shortest(params.theta));

    const std::size_t n = g.node_count();
    InfectionTimes times(n, -1);
    std::vector<double> incoming(n, 0.0);
    std::vector<char> candidate(n, 0);
    std::vector<NodeId> newly;
    for (NodeId s : seeds)
        if (times[s] < 0) {
            times[s] = 0;
            newly.push_back(s);
        }

    std::vector<NodeId> touched;
    for (unsigned t = 1; t <= params.horizon && !newly.empty(); ++t) {
        for (NodeId u : newly)
            for (const Neighbor& nb : g.adjacency(u)) {
                if (times[nb.node] >= 0) continue;
                incoming[nb.node] += nb.weight;
                if (!candidate[nb.node]) {
                    candidate[nb.node] = 1;
                    touched.push_back(nb.node);
                }
            }
        newly.clear();
        for (NodeId v : touched) {
            candidate[v] = 0;
            double need = params.theta * g.strength(v);
            if (incoming[v] > 0.0 && incoming[v] >= need - kSlack * need) newly.push_back(v);
        }
        touched.clear();
        for (NodeId v : newly) times[v] = static_cast<int>(t);
    }
    return times;
}

SpreadCurve curve_from_times(const InfectionTimes& times, unsigned horizon) {
    SpreadCurve curve;
    curve.fractions.assign(horizon + 1, 0.0);
    if (times.empty()) return curve;
    std::vector<std::size_t> newly(horizon + 1, 0);
    for (int t : times)
        if (t >= 0 && static_cast<unsigned>(t) <= horizon) ++newly[static_cast<std::size_t>(t)];
    std::size_t cumulative = 0;
    for (unsigned t = 0; t <= horizon; ++t) {
        cumulative += newly[t];
        curve.fractions[t] = static_cast<double>(cumulative) / static_cast<double>(times.size());
    }
    return curve;
}

SpreadCurve simulate_simple(const Graph& g, std::span<const NodeId> seeds, unsigned horizon) {
    return curve_from_times(simple_infection_times(g, seeds, horizon), horizon);
}

SpreadCurve simulate_complex(const Graph& g, std::span<const NodeId> seeds, const ComplexParams& params) {
    return curve_from_times(complex_infection_times(g, seeds, params), params.horizon);
}

SpreadCurve simulate(const Graph& g, ContagionModel model, std::span<const NodeId> seeds,
                     const ComplexParams& params) {
    return model == ContagionModel::Simple ? simulate_simple(g, seeds, params.horizon)
                                           : simulate_complex(g, seeds, params);
}

void check_curve(const SpreadCurve& curve) {
    double previous = 0.0;
    for (std::size_t t = 0; t < curve.fractions.size(); ++t) {
        double x = curve.fractions[t];
        if (!(x >= 0.0 && x <= 1.0) || x < previous)
            throw Error(ErrorCode::Internal, "spread curve violates monotonicity or bounds at t=" + std::to_string(t));
        previous = x;
    }
}

} // namespace ssm
