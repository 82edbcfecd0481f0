#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace ssm {

enum class ContagionModel { Simple, Complex };

std::string_view to_string(ContagionModel m);
ContagionModel parse_contagion(std::string_view name);

/// Fraction of nodes infected at t = 0..r.
struct SpreadCurve {
    std::vector<double> fractions;

    unsigned horizon() const { return fractions.empty() ? 0 : static_cast<unsigned>(fractions.size() - 1); }
};

struct ComplexParams {
    double theta = 0.5;
    unsigned horizon = 15;
};

/// Infection step per node, -1 when not infected within the horizon.
using InfectionTimes = std::vector<int>;

/// Node v is infected by step t iff some seed lies within shortest distance t.
InfectionTimes simple_infection_times(const Graph& g, std::span<const NodeId> seeds, unsigned horizon);

/// Synchronous threshold dynamics: v joins at step t when the weight from
/// nodes infected by t-1 is positive and at least theta * s_v. Infected
/// nodes stay infected.
InfectionTimes complex_infection_times(const Graph& g, std::span<const NodeId> seeds, const ComplexParams& params);

SpreadCurve curve_from_times(const InfectionTimes& times, unsigned horizon);

SpreadCurve simulate_simple(const Graph& g, std::span<const NodeId> seeds, unsigned horizon);
SpreadCurve simulate_complex(const Graph& g, std::span<const NodeId> seeds, const ComplexParams& params);

SpreadCurve simulate(const Graph& g, ContagionModel model, std::span<const NodeId> seeds,
                     const ComplexParams& params);

/// Throws unless the curve is nondecreasing with all values in [0,1].
void check_curve(const SpreadCurve& curve);

} // namespace ssm
