/*
 * ssm.h - C interface to the Social Sphere influencer-prediction library.
 *
 * All functions return an ssm_status. On failure, ssm_last_error() gives a
 * message describing the most recent error on the calling thread.
 */
#ifndef SSM_SSM_H
#define SSM_SSM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SSM_BUILDING_LIBRARY)
#    define SSM_API __declspec(dllexport)
#  else
#    define SSM_API __declspec(dllimport)
#  endif
#else
#  define SSM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssm_status {
    SSM_OK = 0,
    SSM_ERR_INVALID_ARGUMENT = 1,
    SSM_ERR_PARSE = 2,
    SSM_ERR_IO = 3,
    SSM_ERR_NOT_FOUND = 4,
    SSM_ERR_RANGE = 5,
    SSM_ERR_CONVERGENCE = 6,
    /* the experiment finished but some grid cells failed */
    SSM_ERR_PARTIAL = 7,
    SSM_ERR_INTERNAL = 99
} ssm_status;

typedef struct ssm_graph ssm_graph;
typedef struct ssm_config ssm_config;

SSM_API const char* ssm_version(void);
SSM_API const char* ssm_last_error(void);
SSM_API const char* ssm_status_name(ssm_status status);

/* --- graphs --------------------------------------------------------------- */

/* format: "snap" (two columns, unit weight unless default_weight differs)
 * or "weighted" (u v w [origin]). */
SSM_API ssm_status ssm_graph_load(const char* path, const char* format, double default_weight, ssm_graph** out);
SSM_API ssm_status ssm_graph_parse(const char* text, const char* format, double default_weight, ssm_graph** out);
SSM_API void ssm_graph_free(ssm_graph* g);

SSM_API size_t ssm_graph_node_count(const ssm_graph* g);
SSM_API size_t ssm_graph_edge_count(const ssm_graph* g);
/* Ingest statistics; zero for graphs not produced by load/parse. */
SSM_API size_t ssm_graph_self_loops_dropped(const ssm_graph* g);
SSM_API size_t ssm_graph_duplicates_collapsed(const ssm_graph* g);
/* Number of predicted edges; zero unless produced by ssm_graph_predict. */
SSM_API size_t ssm_graph_predicted_edge_count(const ssm_graph* g);

/* Copies the label of node v into buf (NUL-terminated, truncated to size). */
SSM_API ssm_status ssm_graph_label(const ssm_graph* g, uint32_t v, char* buf, size_t size);

/* Writes the graph as an edge list. Predicted graphs written as "weighted"
 * carry an observed/predicted column. */
SSM_API ssm_status ssm_graph_save(const ssm_graph* g, const char* path, const char* format);

/* Uniform edge sample keeping round(fraction * |E|) edges and all nodes. */
SSM_API ssm_status ssm_graph_sample(const ssm_graph* g, double fraction, uint64_t seed, ssm_graph** out);

/* Scores non-adjacent pairs with the named similarity metric, normalizes to
 * (0, cap] and adds edges weighted 1 - (1 - p)^horizon. */
SSM_API ssm_status ssm_graph_predict(const ssm_graph* train, const char* metric, double cap, unsigned horizon,
                                     ssm_graph** out);

/* --- analysis ------------------------------------------------------------- */

/* out must hold ssm_graph_node_count(g) values. */
SSM_API ssm_status ssm_centrality(const ssm_graph* g, const char* name, double* out);

/* centrality may be NULL for algorithms that need none (or to use node
 * strength). out must hold k entries; *count receives the number written. */
SSM_API ssm_status ssm_select_seeds(const ssm_graph* g, const char* algorithm, const char* centrality, size_t k,
                                    uint32_t* out, size_t* count);

/* contagion: "simple" or "complex". out must hold horizon + 1 fractions. */
SSM_API ssm_status ssm_simulate(const ssm_graph* g, const char* contagion, const uint32_t* seeds, size_t seed_count,
                                double theta, unsigned horizon, double* out);

SSM_API ssm_status ssm_predicted_edge_weight(double probability, unsigned horizon, double* out);

/* Mean squared difference over points 1..horizon of two curves of length
 * horizon + 1. */
SSM_API ssm_status ssm_mse(const double* predicted, const double* observed, unsigned horizon, double* out);

/* --- experiments ---------------------------------------------------------- */

SSM_API ssm_status ssm_config_new(ssm_config** out);
SSM_API void ssm_config_free(ssm_config* cfg);
/* INI file with [input], [experiment], [contagion], [link_prediction] and
 * [centrality] sections. */
SSM_API ssm_status ssm_config_load_file(ssm_config* cfg, const char* path);
/* key is "section.key", e.g. "experiment.trials". */
SSM_API ssm_status ssm_config_set(ssm_config* cfg, const char* key, const char* value);
/* Current value of a setting, copied into buf. */
SSM_API ssm_status ssm_config_get(const ssm_config* cfg, const char* key, char* buf, size_t size);

typedef void (*ssm_progress_fn)(const char* message, void* user);

typedef struct ssm_run_summary {
    size_t records;
    size_t failures;
} ssm_run_summary;

/* Runs the configured grid and writes results. Returns SSM_ERR_PARTIAL when
 * the run completed with failed cells. progress may be NULL. */
SSM_API ssm_status ssm_run_experiment(const ssm_config* cfg, ssm_progress_fn progress, void* user,
                                      ssm_run_summary* summary);

/* Regenerate tables/ or curves/ from the record files in dir. */
SSM_API ssm_status ssm_write_tables(const char* dir);
SSM_API ssm_status ssm_write_curves(const char* dir);

#ifdef __cplusplus
}
#endif

#endif
