#include "core/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"
#include "core/random.hpp"
#include "core/text.hpp"

namespace ssm {

InputFormat parse_input_format(std::string_view name) {
    if (text::iequals(name, "snap")) return InputFormat::Snap;
    if (text::iequals(name, "weighted")) return InputFormat::Weighted;
    throw Error(ErrorCode::InvalidArgument, "unknown input format '" + std::string(name) + "'");
}

std::string_view to_string(InputFormat f) {
    return f == InputFormat::Snap ? "snap" : "weighted";
}

namespace {

/// Accumulates records into an undirected simple graph.
class EdgeListAssembler {
public:
    explicit EdgeListAssembler(bool conflicting_weights_fail)
        : conflicting_weights_fail_(conflicting_weights_fail) {}

    void add(const EdgeListRecord& rec, double weight, std::size_t line) {
        ++report_.data_lines;
        NodeId a = intern(rec.from_label);
        NodeId b = intern(rec.to_label);
        if (a == b) {
            ++report_.self_loops_dropped;
            return;
        }
        if (a > b) std::swap(a, b);
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        auto [it, inserted] = index_.emplace(key, edges_.size());
        if (inserted) {
            edges_.push_back({a, b, weight});
            return;
        }
        ++report_.duplicates_collapsed;
        double previous = edges_[it->second].weight;
        if (conflicting_weights_fail_ && std::abs(previous - weight) > 1e-12)
            throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": edge " + rec.from_label +
                                              "-" + rec.to_label + " repeated with weight " +
                                              text::shortest(weight) + " (previously " +
                                              text::shortest(previous) + ")");
    }

    IngestReport finish() {
        const std::size_t n = labels_.size();
        report_.graph = Graph::from_edges(n, edges_, std::move(labels_));
        return std::move(report_);
    }

private:
    NodeId intern(const std::string& label) {
        auto [it, inserted] = ids_.emplace(label, static_cast<NodeId>(labels_.size()));
        if (inserted) labels_.push_back(label);
        return it->second;
    }

    bool conflicting_weights_fail_;
    IngestReport report_;
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::string> labels_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<Edge> edges_;
};

void check_weight(double w, std::size_t line) {
    if (!(w > 0.0 && w <= 1.0))
        throw Error(ErrorCode::Range, "line " + std::to_string(line) + ": weight " + text::shortest(w) +
                                          " outside (0,1]");
}

template <typename LineHandler>
void for_each_data_line(std::istream& in, LineHandler&& handle) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;
        handle(body, number);
    }
}

} // namespace

IngestReport parse_snap(std::istream& in, double default_weight) {
    check_weight(default_weight, 0);
    EdgeListAssembler assembler(false);
    for_each_data_line(in, [&](std::string_view body, std::size_t number) {
        auto f = text::fields(body);
        if (f.size() != 2)
            throw Error(ErrorCode::Parse, "line " + std::to_string(number) +
                                              ": expected two node labels, got '" + std::string(body) + "'");
        assembler.add({std::string(f[0]), std::string(f[1]), std::nullopt}, default_weight, number);
    });
    return assembler.finish();
}

IngestReport parse_snap(std::string_view text, double default_weight) {
    std::istringstream in{std::string(text)};
    return parse_snap(in, default_weight);
}

IngestReport parse_weighted(std::istream& in) {
    EdgeListAssembler assembler(true);
    for_each_data_line(in, [&](std::string_view body, std::size_t number) {
        auto f = text::fields(body);
        bool provenance_ok = f.size() == 3 || (f.size() == 4 && (f[3] == "observed" || f[3] == "predicted"));
        double w = 0.0;
        if (!provenance_ok || !text::parse_double(f[2], w))
            throw Error(ErrorCode::Parse, "line " + std::to_string(number) +
                                              ": expected 'u v w', got '" + std::string(body) + "'");
        check_weight(w, number);
        assembler.add({std::string(f[0]), std::string(f[1]), w}, w, number);
    });
    return assembler.finish();
}

IngestReport parse_weighted(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_weighted(in);
}

IngestReport load_graph(const std::string& path, InputFormat format, double default_weight) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    return format == InputFormat::Snap ? parse_snap(in, default_weight) : parse_weighted(in);
}

void write_snap(std::ostream& out, const Graph& g) {
    out << "# Undirected graph: " << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
    out << "# FromNodeId\tToNodeId\n";
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 0) out << g.label(v) << '\t' << g.label(v) << '\n';
    for (const Edge& e : g.edges()) out << g.label(e.u) << '\t' << g.label(e.v) << '\n';
}

void write_weighted(std::ostream& out, const Graph& g) {
    out << "# u v w\n";
    for (const Edge& e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << text::shortest(e.weight) << '\n';
}

std::size_t retained_edge_count(std::size_t edge_count, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw Error(ErrorCode::Range, "sample fraction must lie in (0,1], got " + text::shortest(fraction));
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(edge_count) + 0.5));
}

Graph sample_training_graph(const Graph& g, const SamplingConfig& cfg) {
    if (g.empty()) throw Error(ErrorCode::InvalidArgument, "cannot sample an empty graph");
    auto edges = g.edges();
    const std::size_t keep = retained_edge_count(edges.size(), cfg.retain_fraction);

    // Partial Fisher-Yates over edge indices.
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(cfg.rng_seed);
    for (std::size_t i = 0; i < keep; ++i) {
        auto j = i + static_cast<std::size_t>(uniform_below(rng, order.size() - i));
        std::swap(order[i], order[j]);
    }
    order.resize(keep);
    std::sort(order.begin(), order.end());

    std::vector<Edge> kept;
    kept.reserve(keep);
    for (auto i : order) kept.push_back(edges[i]);
    auto labels = std::vector<std::string>(g.labels().begin(), g.labels().end());
    return Graph::from_edges(g.node_count(), kept, std::move(labels));
}

} // namespace ssm
