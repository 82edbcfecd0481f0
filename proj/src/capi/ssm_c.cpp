#include "ssm/ssm.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "core/contagion.hpp"
#include "core/error.hpp"
#include "core/evaluation.hpp"
#include "core/experiment.hpp"
#include "core/ingest.hpp"
#include "core/social_sphere.hpp"
#include "core/version.hpp"

struct ssm_graph {
    ssm::PredictedGraph data;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;

    const ssm::Graph& graph() const { return data.graph(); }
};

struct ssm_config {
    ssm::ExperimentConfig cfg;
};

namespace {

thread_local std::string last_error;

ssm_status status_of(ssm::ErrorCode code) {
    switch (code) {
    case ssm::ErrorCode::InvalidArgument: return SSM_ERR_INVALID_ARGUMENT;
    case ssm::ErrorCode::Parse: return SSM_ERR_PARSE;
    case ssm::ErrorCode::Io: return SSM_ERR_IO;
    case ssm::ErrorCode::NotFound: return SSM_ERR_NOT_FOUND;
    case ssm::ErrorCode::Range: return SSM_ERR_RANGE;
    case ssm::ErrorCode::Convergence: return SSM_ERR_CONVERGENCE;
    case ssm::ErrorCode::Internal: return SSM_ERR_INTERNAL;
    }
    return SSM_ERR_INTERNAL;
}

template <typename F>
ssm_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const ssm::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SSM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SSM_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw ssm::Error(ssm::ErrorCode::InvalidArgument, what);
}

ssm_graph* wrap(ssm::IngestReport report) {
    auto* g = new ssm_graph;
    g->data = ssm::PredictedGraph::observed_only(std::move(report.graph));
    g->self_loops_dropped = report.self_loops_dropped;
    g->duplicates_collapsed = report.duplicates_collapsed;
    return g;
}

void copy_out(const std::string& s, char* buf, std::size_t size) {
    require(buf != nullptr && size > 0, "output buffer is empty");
    std::size_t n = std::min(s.size(), size - 1);
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
}

} // namespace

extern "C" {

const char* ssm_version(void) { return ssm::kVersion; }

const char* ssm_last_error(void) { return last_error.c_str(); }

const char* ssm_status_name(ssm_status status) {
    switch (status) {
    case SSM_OK: return "ok";
    case SSM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SSM_ERR_PARSE: return "parse error";
    case SSM_ERR_IO: return "i/o error";
    case SSM_ERR_NOT_FOUND: return "not found";
    case SSM_ERR_RANGE: return "out of range";
    case SSM_ERR_CONVERGENCE: return "did not converge";
    case SSM_ERR_PARTIAL: return "completed with failed cells";
    case SSM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

ssm_status ssm_graph_load(const char* path, const char* format, double default_weight, ssm_graph** out) {
    return guarded([&] {
        require(path && format && out, "null argument");
        *out = wrap(ssm::load_graph(path, ssm::parse_input_format(format), default_weight));
        return SSM_OK;
    });
}

ssm_status ssm_graph_parse(const char* text, const char* format, double default_weight, ssm_graph** out) {
    return guarded([&] {
        require(text && format && out, "null argument");
        auto fmt = ssm::parse_input_format(format);
        *out = wrap(fmt == ssm::InputFormat::Snap ? ssm::parse_snap(std::string_view(text), default_weight)
                                                  : ssm::parse_weighted(std::string_view(text)));
        return SSM_OK;
    });
}

void ssm_graph_free(ssm_graph* g) { delete g; }

size_t ssm_graph_node_count(const ssm_graph* g) { return g ? g->graph().node_count() : 0; }
size_t ssm_graph_edge_count(const ssm_graph* g) { return g ? g->graph().edge_count() : 0; }
size_t ssm_graph_self_loops_dropped(const ssm_graph* g) { return g ? g->self_loops_dropped : 0; }
size_t ssm_graph_duplicates_collapsed(const ssm_graph* g) { return g ? g->duplicates_collapsed : 0; }
size_t ssm_graph_predicted_edge_count(const ssm_graph* g) { return g ? g->data.predicted_edges().size() : 0; }

ssm_status ssm_graph_label(const ssm_graph* g, uint32_t v, char* buf, size_t size) {
    return guarded([&] {
        require(g != nullptr, "null graph");
        if (!g->graph().contains(v)) throw ssm::Error(ssm::ErrorCode::NotFound, "no node " + std::to_string(v));
        copy_out(g->graph().label(v), buf, size);
        return SSM_OK;
    });
}

ssm_status ssm_graph_save(const ssm_graph* g, const char* path, const char* format) {
    return guarded([&] {
        require(g && path && format, "null argument");
        auto fmt = ssm::parse_input_format(format);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ssm::Error(ssm::ErrorCode::Io, std::string("cannot write ") + path);
        if (fmt == ssm::InputFormat::Snap)
            ssm::write_snap(out, g->graph());
        else if (!g->data.predicted_edges().empty())
            ssm::write_predicted_graph(out, g->data);
        else
            ssm::write_weighted(out, g->graph());
        if (!out) throw ssm::Error(ssm::ErrorCode::Io, std::string("error writing ") + path);
        return SSM_OK;
    });
}

ssm_status ssm_graph_sample(const ssm_graph* g, double fraction, uint64_t seed, ssm_graph** out) {
    return guarded([&] {
        require(g && out, "null argument");
        auto* s = new ssm_graph;
        try {
            s->data = ssm::PredictedGraph::observed_only(ssm::sample_training_graph(g->graph(), {fraction, seed}));
        } catch (...) {
            delete s;
            throw;
        }
        *out = s;
        return SSM_OK;
    });
}

ssm_status ssm_graph_predict(const ssm_graph* train, const char* metric, double cap, unsigned horizon,
                             ssm_graph** out) {
    return guarded([&] {
        require(train && metric && out, "null argument");
        auto id = ssm::parse_metric(metric);
        auto scores = ssm::similarity_scores(train->graph(), id, {}, cap);
        auto* p = new ssm_graph;
        try {
            p->data = ssm::build_predicted_graph(train->graph(), scores.normalized, ssm::Horizon{horizon});
        } catch (...) {
            delete p;
            throw;
        }
        *out = p;
        return SSM_OK;
    });
}

ssm_status ssm_centrality(const ssm_graph* g, const char* name, double* out) {
    return guarded([&] {
        require(g && name && out, "null argument");
        auto values = ssm::centrality(g->graph(), ssm::parse_centrality(name));
        std::copy(values.begin(), values.end(), out);
        return SSM_OK;
    });
}

ssm_status ssm_select_seeds(const ssm_graph* g, const char* algorithm, const char* centrality, size_t k,
                            uint32_t* out, size_t* count) {
    return guarded([&] {
        require(g && algorithm && out && count, "null argument");
        auto alg = ssm::parse_algorithm(algorithm);
        ssm::SeedSet seeds;
        if (centrality)
            seeds = ssm::select_seeds(g->graph(), alg, k,
                                      ssm::centrality(g->graph(), ssm::parse_centrality(centrality)));
        else
            seeds = ssm::select_seeds(g->graph(), alg, k);
        std::copy(seeds.nodes.begin(), seeds.nodes.end(), out);
        *count = seeds.nodes.size();
        return SSM_OK;
    });
}

ssm_status ssm_simulate(const ssm_graph* g, const char* contagion, const uint32_t* seeds, size_t seed_count,
                        double theta, unsigned horizon, double* out) {
    return guarded([&] {
        require(g && contagion && out && (seeds || seed_count == 0), "null argument");
        auto curve = ssm::simulate(g->graph(), ssm::parse_contagion(contagion),
                                   std::span<const ssm::NodeId>(seeds, seed_count), ssm::ComplexParams{theta, horizon});
        std::copy(curve.fractions.begin(), curve.fractions.end(), out);
        return SSM_OK;
    });
}

ssm_status ssm_predicted_edge_weight(double probability, unsigned horizon, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = ssm::predicted_edge_weight(probability, ssm::Horizon{horizon});
        return SSM_OK;
    });
}

ssm_status ssm_mse(const double* predicted, const double* observed, unsigned horizon, double* out) {
    return guarded([&] {
        require(predicted && observed && out, "null argument");
        ssm::SpreadCurve p{{predicted, predicted + horizon + 1}};
        ssm::SpreadCurve o{{observed, observed + horizon + 1}};
        *out = ssm::mse(p, o);
        return SSM_OK;
    });
}

ssm_status ssm_config_new(ssm_config** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new ssm_config;
        return SSM_OK;
    });
}

void ssm_config_free(ssm_config* cfg) { delete cfg; }

ssm_status ssm_config_load_file(ssm_config* cfg, const char* path) {
    return guarded([&] {
        require(cfg && path, "null argument");
        ssm::load_config_file(cfg->cfg, path);
        return SSM_OK;
    });
}

ssm_status ssm_config_set(ssm_config* cfg, const char* key, const char* value) {
    return guarded([&] {
        require(cfg && key && value, "null argument");
        ssm::apply_setting(cfg->cfg, key, value);
        return SSM_OK;
    });
}

ssm_status ssm_config_get(const ssm_config* cfg, const char* key, char* buf, size_t size) {
    return guarded([&] {
        require(cfg && key, "null argument");
        auto all = ssm::describe(cfg->cfg);
        auto it = all.find(key);
        if (it == all.end()) throw ssm::Error(ssm::ErrorCode::NotFound, std::string("unknown setting '") + key + "'");
        copy_out(it->second, buf, size);
        return SSM_OK;
    });
}

ssm_status ssm_run_experiment(const ssm_config* cfg, ssm_progress_fn progress, void* user,
                              ssm_run_summary* summary) {
    return guarded([&] {
        require(cfg != nullptr, "null config");
        ssm::ProgressFn report;
        if (progress) report = [&](const std::string& msg) { progress(msg.c_str(), user); };
        auto result = ssm::run_experiment(cfg->cfg, report);
        if (summary) *summary = {result.records, result.failures};
        if (result.failures > 0) {
            last_error = std::to_string(result.failures) + " grid cells failed; see run.json in " +
                         result.output_dir.string();
            return SSM_ERR_PARTIAL;
        }
        return SSM_OK;
    });
}

ssm_status ssm_write_tables(const char* dir) {
    return guarded([&] {
        require(dir != nullptr, "null argument");
        ssm::rebuild_tables(dir);
        return SSM_OK;
    });
}

ssm_status ssm_write_curves(const char* dir) {
    return guarded([&] {
        require(dir != nullptr, "null argument");
        ssm::rebuild_curves(dir);
        return SSM_OK;
    });
}

} // extern "C"
