#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace ssm {

enum class InputFormat { Snap, Weighted };

InputFormat parse_input_format(std::string_view name);
std::string_view to_string(InputFormat f);

struct EdgeListRecord {
    std::string from_label;
    std::string to_label;
    std::optional<double> weight;
};

struct IngestReport {
    Graph graph;
    std::size_t data_lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

/// SNAP edge list: '#' comments, "from<ws>to" data lines. Reciprocal and
/// repeated pairs collapse to one undirected edge carrying `default_weight`.
/// Node ids follow first appearance order.
IngestReport parse_snap(std::istream& in, double default_weight = 1.0);
IngestReport parse_snap(std::string_view text, double default_weight = 1.0);

/// "u v w" lines, optionally followed by a provenance column
/// (observed|predicted) as written by the predicted-graph dump.
IngestReport parse_weighted(std::istream& in);
IngestReport parse_weighted(std::string_view text);

IngestReport load_graph(const std::string& path, InputFormat format, double default_weight = 1.0);

/// SNAP serialization. Isolated nodes are written as self-loop lines so that a
/// reparse recovers the same node set.
void write_snap(std::ostream& out, const Graph& g);
void write_weighted(std::ostream& out, const Graph& g);

struct SamplingConfig {
    double retain_fraction = 1.0;
    std::uint64_t rng_seed = 0;
};

/// Number of edges kept for a given fraction: round-half-up of fraction*|E|.
std::size_t retained_edge_count(std::size_t edge_count, double fraction);

/// Uniformly samples round(fraction*|E|) edges without replacement. Every
/// node is kept, possibly isolated.
Graph sample_training_graph(const Graph& g, const SamplingConfig& cfg);

} // namespace ssm
