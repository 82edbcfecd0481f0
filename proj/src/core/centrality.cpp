#include "core/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/text.hpp"

namespace ssm {

namespace {

constexpr std::array<std::string_view, kAllCentralities.size()> kCentralityNames = {
    "BalancedIndex", "Betweenness", "Closeness", "ClusterRank", "ComplexPathCentrality", "Degree",
    "Eigenvector",   "HIndex",      "KCore",     "LeaderRank",  "LocalRank",             "PageRank",
};

void require_nonempty(const Graph& g) {
    if (g.empty()) throw Error(ErrorCode::InvalidArgument, "centrality of an empty graph");
}

[[noreturn]] void not_converged(std::string_view what, unsigned iterations) {
    throw Error(ErrorCode::Convergence,
                std::string(what) + " did not converge within " + std::to_string(iterations) + " iterations");
}

bool same_distance(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(a, b)); }

/// Reusable single-source Dijkstra state recording shortest-path counts and
/// predecessors, shared by betweenness and closeness.
class ShortestPathDag {
public:
    explicit ShortestPathDag(const Graph& g)
        : g_(g), dist_(g.node_count(), kUnreachable), sigma_(g.node_count(), 0.0), settled_(g.node_count(), 0),
          preds_(g.node_count()) {}

    void run(NodeId s) {
        for (NodeId v : reached_) {
            dist_[v] = kUnreachable;
            sigma_[v] = 0.0;
            settled_[v] = 0;
            preds_[v].clear();
        }
        order_.clear();
        reached_.clear();

        using Entry = std::pair<double, NodeId>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        dist_[s] = 0.0;
        sigma_[s] = 1.0;
        reached_.push_back(s);
        heap.emplace(0.0, s);
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (settled_[v] || d > dist_[v]) continue;
            settled_[v] = 1;
            order_.push_back(v);
            for (const Neighbor& nb : g_.adjacency(v)) {
                NodeId w = nb.node;
                if (settled_[w]) continue;
                double alt = d + edge_distance(nb.weight);
                if (dist_[w] == kUnreachable) reached_.push_back(w);
                if (dist_[w] != kUnreachable && same_distance(alt, dist_[w])) {
                    sigma_[w] += sigma_[v];
                    preds_[w].push_back(v);
                } else if (alt < dist_[w]) {
                    dist_[w] = alt;
                    sigma_[w] = sigma_[v];
                    preds_[w].assign(1, v);
                    heap.emplace(alt, w);
                }
            }
        }
    }

    /// Settled nodes in nondecreasing distance order.
    const std::vector<NodeId>& order() const { return order_; }
    double distance(NodeId v) const { return dist_[v]; }
    double paths(NodeId v) const { return sigma_[v]; }
    const std::vector<NodeId>& predecessors(NodeId v) const { return preds_[v]; }

private:
    const Graph& g_;
    std::vector<double> dist_;
    std::vector<double> sigma_;
    std::vector<char> settled_;
    std::vector<std::vector<NodeId>> preds_;
    std::vector<NodeId> order_;
    std::vector<NodeId> reached_;
};

/// Runs per_source over all sources. Sources are cut into a fixed number of
/// chunks that depends only on n; chunk partials are summed in chunk order,
/// so the result is bit-identical for any thread count.
template <typename PerSource>
CentralityVector accumulate_over_sources(const Graph& g, unsigned threads, PerSource&& per_source) {
    const std::size_t n = g.node_count();
    const std::size_t chunks = std::min<std::size_t>(n, 64);
    std::vector<CentralityVector> partial(chunks, CentralityVector(n, 0.0));
    parallel_blocks(chunks, threads, [&](std::size_t first, std::size_t last, unsigned) {
        ShortestPathDag dag(g);
        std::vector<double> scratch(n, 0.0);
        for (std::size_t c = first; c < last; ++c)
            for (std::size_t s = n * c / chunks; s < n * (c + 1) / chunks; ++s)
                per_source(static_cast<NodeId>(s), dag, scratch, partial[c]);
    });
    CentralityVector total(n, 0.0);
    for (const auto& p : partial)
        for (std::size_t v = 0; v < n; ++v) total[v] += p[v];
    return total;
}

} // namespace

std::string_view to_string(CentralityId c) { return kCentralityNames[static_cast<std::size_t>(c)]; }

CentralityId parse_centrality(std::string_view name) {
    for (std::size_t i = 0; i < kCentralityNames.size(); ++i)
        if (text::iequals(name, kCentralityNames[i])) return kAllCentralities[i];
    throw Error(ErrorCode::InvalidArgument, "unknown centrality '" + std::string(name) + "'");
}

CentralityVector strength_centrality(const Graph& g) {
    CentralityVector out(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) out[v] = g.strength(v);
    return out;
}

CentralityVector betweenness_centrality(const Graph& g, unsigned threads) {
    auto total = accumulate_over_sources(
        g, threads, [](NodeId s, ShortestPathDag& dag, std::vector<double>& delta, CentralityVector& bc) {
            dag.run(s);
            const auto& order = dag.order();
            for (NodeId v : order) delta[v] = 0.0;
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                NodeId w = *it;
                for (NodeId v : dag.predecessors(w)) delta[v] += dag.paths(v) / dag.paths(w) * (1.0 + delta[w]);
                if (w != s) bc[w] += delta[w];
            }
        });
    for (double& x : total) x /= 2.0;
    return total;
}

CentralityVector closeness_centrality(const Graph& g, unsigned threads) {
    return accumulate_over_sources(g, threads,
                                   [](NodeId s, ShortestPathDag& dag, std::vector<double>&, CentralityVector& cc) {
                                       dag.run(s);
                                       double sum = 0.0;
                                       for (NodeId v : dag.order())
                                           if (v != s) sum += 1.0 / dag.distance(v);
                                       cc[s] = sum;
                                   });
}

CentralityVector eigenvector_centrality(const Graph& g, double tolerance, unsigned max_iterations) {
    require_nonempty(g);
    const std::size_t n = g.node_count();
    // power iteration on A + I
    CentralityVector x(n, 1.0 / std::sqrt(static_cast<double>(n))), next(n);
    for (unsigned it = 0; it < max_iterations; ++it) {
        for (NodeId v = 0; v < n; ++v) {
            double s = x[v];
            for (const Neighbor& nb : g.adjacency(v)) s += nb.weight * x[nb.node];
            next[v] = s;
        }
        double norm = std::sqrt(std::inner_product(next.begin(), next.end(), next.begin(), 0.0));
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            next[v] /= norm;
            change += (next[v] - x[v]) * (next[v] - x[v]);
        }
        x.swap(next);
        if (std::sqrt(change) < tolerance) return x;
    }
    not_converged("eigenvector centrality", max_iterations);
}

CentralityVector pagerank(const Graph& g, double damping, double tolerance, unsigned max_iterations) {
    require_nonempty(g);
    const std::size_t n = g.node_count();
    const double nd = static_cast<double>(n);
    CentralityVector x(n, 1.0 / nd), next(n);
    for (unsigned it = 0; it < max_iterations; ++it) {
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v)
            if (g.degree(v) == 0) dangling += x[v];
        std::fill(next.begin(), next.end(), (1.0 - damping) / nd + damping * dangling / nd);
        for (NodeId u = 0; u < n; ++u) {
            if (g.degree(u) == 0) continue;
            double share = damping * x[u] / g.strength(u);
            for (const Neighbor& nb : g.adjacency(u)) next[nb.node] += share * nb.weight;
        }
        double sum = std::accumulate(next.begin(), next.end(), 0.0);
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            next[v] /= sum;
            change += std::abs(next[v] - x[v]);
        }
        x.swap(next);
        if (change < tolerance) return x;
    }
    not_converged("PageRank", max_iterations);
}

CentralityVector leaderrank(const Graph& g, double tolerance, unsigned max_iterations) {
    require_nonempty(g);
    const std::size_t n = g.node_count();
    const double nd = static_cast<double>(n);
    // Without edges the ground-node walk is periodic; every node is alike.
    if (g.edge_count() == 0) return CentralityVector(n, 1.0);

    // Ground node linked to every node with unit weight in both directions.
    CentralityVector x(n, 1.0), next(n);
    double ground = 0.0;
    for (unsigned it = 0; it < max_iterations; ++it) {
        double next_ground = 0.0;
        std::fill(next.begin(), next.end(), ground / nd);
        for (NodeId u = 0; u < n; ++u) {
            double share = x[u] / (g.strength(u) + 1.0);
            next_ground += share;
            for (const Neighbor& nb : g.adjacency(u)) next[nb.node] += share * nb.weight;
        }
        double change = std::abs(next_ground - ground);
        for (std::size_t v = 0; v < n; ++v) change += std::abs(next[v] - x[v]);
        x.swap(next);
        ground = next_ground;
        if (change / nd < tolerance) {
            for (double& s : x) s += ground / nd;
            return x;
        }
    }
    not_converged("LeaderRank", max_iterations);
}

CentralityVector local_clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    CentralityVector c(n, 0.0);
    std::vector<char> mark(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        auto adj = g.adjacency(v);
        if (adj.size() < 2) continue;
        for (const Neighbor& nb : adj) mark[nb.node] = 1;
        std::size_t links = 0;
        for (const Neighbor& a : adj)
            for (const Neighbor& b : g.adjacency(a.node))
                if (mark[b.node]) ++links;
        for (const Neighbor& nb : adj) mark[nb.node] = 0;
        double k = static_cast<double>(adj.size());
        c[v] = static_cast<double>(links) / (k * (k - 1.0));  // each triangle edge seen twice
    }
    return c;
}

CentralityVector clusterrank(const Graph& g) {
    auto c = local_clustering(g);
    CentralityVector out(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double sum = 0.0;
        for (const Neighbor& nb : g.adjacency(v)) sum += static_cast<double>(g.degree(nb.node)) + 1.0;
        out[v] = std::pow(10.0, -c[v]) * sum;
    }
    return out;
}

CentralityVector localrank(const Graph& g) {
    const std::size_t n = g.node_count();
    // reach[u] = |N_1(u) ∪ N_2(u)|
    std::vector<double> reach(n, 0.0);
    std::vector<NodeId> stamp(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        const NodeId tag = u + 1;
        stamp[u] = tag;
        std::size_t count = 0;
        for (const Neighbor& x : g.adjacency(u)) {
            if (stamp[x.node] != tag) {
                stamp[x.node] = tag;
                ++count;
            }
            for (const Neighbor& y : g.adjacency(x.node))
                if (stamp[y.node] != tag) {
                    stamp[y.node] = tag;
                    ++count;
                }
        }
        reach[u] = static_cast<double>(count);
    }
    std::vector<double> q(n, 0.0);
    for (NodeId w = 0; w < n; ++w)
        for (const Neighbor& u : g.adjacency(w)) q[w] += reach[u.node];
    CentralityVector out(n, 0.0);
    for (NodeId v = 0; v < n; ++v)
        for (const Neighbor& w : g.adjacency(v)) out[v] += q[w.node];
    return out;
}

CentralityVector h_index(const Graph& g) {
    CentralityVector out(g.node_count(), 0.0);
    std::vector<std::size_t> degs;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        degs.clear();
        for (const Neighbor& nb : g.adjacency(v)) degs.push_back(g.degree(nb.node));
        std::sort(degs.begin(), degs.end(), std::greater<>());
        std::size_t h = 0;
        while (h < degs.size() && degs[h] >= h + 1) ++h;
        out[v] = static_cast<double>(h);
    }
    return out;
}

std::vector<unsigned> core_numbers(const Graph& g) {
    // Batagelj-Zaversnik bucket peeling.
    const std::size_t n = g.node_count();
    std::vector<unsigned> deg(n);
    unsigned max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = static_cast<unsigned>(g.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::size_t> bin(max_deg + 1, 0);
    for (unsigned d : deg) ++bin[d];
    std::size_t start = 0;
    for (auto& b : bin) {
        std::size_t count = b;
        b = start;
        start += count;
    }
    std::vector<std::size_t> pos(n);
    std::vector<NodeId> vert(n);
    for (NodeId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (unsigned d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
    if (!bin.empty()) bin[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        NodeId v = vert[i];
        for (const Neighbor& nb : g.adjacency(v)) {
            NodeId u = nb.node;
            if (deg[u] > deg[v]) {
                unsigned du = deg[u];
                std::size_t pu = pos[u];
                std::size_t pw = bin[du];
                NodeId w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return deg;
}

CentralityVector min_max_normalized(const CentralityVector& scores) {
    if (scores.empty()) return {};
    auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
    double min = *lo, range = *hi - *lo;
    CentralityVector out(scores.size(), 1.0);
    if (range <= 0.0) return out;
    for (std::size_t i = 0; i < scores.size(); ++i) out[i] = (scores[i] - min) / range;
    return out;
}

CentralityVector balanced_index(const Graph& g, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw Error(ErrorCode::Range, "balanced-index lambda must lie in [0,1]");
    auto strength = min_max_normalized(strength_centrality(g));
    auto cores = core_numbers(g);
    auto core = min_max_normalized(CentralityVector(cores.begin(), cores.end()));
    CentralityVector out(g.node_count());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = lambda * strength[v] + (1.0 - lambda) * core[v];
    return out;
}

CentralityVector complex_path_centrality(const Graph& g, const ComplexParams& params, unsigned threads) {
    CentralityVector out(g.node_count(), 0.0);
    parallel_blocks(g.node_count(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t v = begin; v < end; ++v) {
            const NodeId seed[] = {static_cast<NodeId>(v)};
            auto times = complex_infection_times(g, seed, params);
            out[v] = static_cast<double>(std::count_if(times.begin(), times.end(), [](int t) { return t >= 0; }));
        }
    });
    return out;
}

CentralityVector centrality(const Graph& g, CentralityId id, const CentralityParams& p) {
    require_nonempty(g);
    switch (id) {
    case CentralityId::BalancedIndex: return balanced_index(g, p.balanced_lambda);
    case CentralityId::Betweenness: return betweenness_centrality(g, p.threads);
    case CentralityId::Closeness: return closeness_centrality(g, p.threads);
    case CentralityId::ClusterRank: return clusterrank(g);
    case CentralityId::ComplexPathCentrality: return complex_path_centrality(g, p.complex_path, p.threads);
    case CentralityId::Degree: return strength_centrality(g);
    case CentralityId::Eigenvector: return eigenvector_centrality(g, p.tolerance, p.max_iterations);
    case CentralityId::HIndex: return h_index(g);
    case CentralityId::KCore: {
        auto cores = core_numbers(g);
        return CentralityVector(cores.begin(), cores.end());
    }
    case CentralityId::LeaderRank: return leaderrank(g, p.tolerance, p.max_iterations);
    case CentralityId::LocalRank: return localrank(g);
    case CentralityId::PageRank: return pagerank(g, p.damping, p.tolerance, p.max_iterations);
    }
    throw Error(ErrorCode::Internal, "unhandled centrality");
}

std::vector<NodeId> rank_nodes(const CentralityVector& scores) {
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
    return order;
}

} // namespace ssm
