/* C interface to the c2 residue library.
 *
 * All functions return a status code; results travel through out
 * parameters.  Strings returned through char** are heap-allocated and must
 * be released with c2inv_string_free.  On any non-OK status,
 * c2inv_last_error() describes the failure for the calling thread.
 */
#ifndef C2INV_C2INV_H
#define C2INV_C2INV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum c2inv_status {
  C2INV_OK = 0,
  C2INV_ERROR_INVALID_ARGUMENT = 1,
  C2INV_ERROR_PARSE = 2,
  C2INV_ERROR_PRECONDITION = 3,
  C2INV_ERROR_BUDGET = 4,
  C2INV_ERROR_INTERNAL = 5,
} c2inv_status;

const char* c2inv_version(void);
const char* c2inv_status_name(c2inv_status status);
/* Message for the most recent failure on this thread; never NULL. */
const char* c2inv_last_error(void);

void c2inv_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

typedef struct c2inv_graph c2inv_graph;

/* Edge-list text: one "u v" pair per line, '#' comments. */
c2inv_status c2inv_graph_parse(const char* text, c2inv_graph** out);
/* Catalog name ("k4", "oct", "c7", or an alias) or an edge-list file path. */
c2inv_status c2inv_graph_load(const char* name_or_path, c2inv_graph** out);
void c2inv_graph_free(c2inv_graph* g);

c2inv_status c2inv_graph_order(const c2inv_graph* g, uint32_t* vertices,
                               uint32_t* edges);
/* result = 1 when the graph completes to a simple 4-regular internally
 * 6-edge-connected graph, else 0; reason (optional) says why not. */
c2inv_status c2inv_graph_primitive_divergent(const c2inv_graph* g,
                                             int32_t* result, char** reason);
c2inv_status c2inv_graph_spanning_tree_count(const c2inv_graph* g,
                                             uint64_t* count);

/* Polynomial text in the canonical term order ("a1*a2 + a1*a3"). */
c2inv_status c2inv_kirchhoff_string(const c2inv_graph* g, char** out);
/* partition: parts separated by '|', labels by whitespace: "a b | c". */
c2inv_status c2inv_forest_poly_string(const c2inv_graph* g,
                                      const char* partition, char** out);

/* ---- computations ------------------------------------------------- */

typedef struct c2inv_run_config {
  uint64_t budget_evaluations; /* 0 = default 1e9 */
  uint64_t budget_states;      /* 0 = default 1e8 */
  uint64_t seed;               /* randomized suites; default 1729 */
  uint32_t workers;            /* 0 = hardware threads */
} c2inv_run_config;

void c2inv_run_config_init(c2inv_run_config* cfg);

typedef struct c2inv_c2_report {
  uint32_t p, s, q;
  char method[16];    /* "definition", "dodgson", "coefficient", "partition" */
  uint32_t modulus;   /* q for point-count methods, p for coefficient ones */
  uint32_t residue;   /* c2 representative in [0, modulus) */
  int32_t has_count;
  uint64_t count;     /* raw zero count or coefficient behind the residue */
  double runtime_ms;
} c2inv_c2_report;

/* method: NULL or "auto" picks the cheapest in-budget method; otherwise
 * "definition", "dodgson", "coefficient" or "partition".  cfg may be NULL
 * for defaults. */
c2inv_status c2inv_c2_compute(const c2inv_graph* g, uint32_t p, uint32_t s,
                              const char* method, const c2inv_run_config* cfg,
                              c2inv_c2_report* out);

/* ---- verification suites ------------------------------------------ */

/* suite: "lemmas", "prop", "theorem1" or "all".  json_lines (optional)
 * receives one JSON object per check.  Status is OK even when checks fail;
 * inspect the counts. */
c2inv_status c2inv_verify(const char* suite, const c2inv_run_config* cfg,
                          char** json_lines, uint32_t* passed,
                          uint32_t* failed, uint32_t* skipped);

/* ---- catalog ------------------------------------------------------- */

/* JSON object with "entries" (runnable graphs) and "census" (recorded
 * reference values, never recomputed). */
c2inv_status c2inv_catalog_json(char** json);
/* Writes <name>.edges files; json_paths (optional) receives a JSON array of
 * the written paths. */
c2inv_status c2inv_catalog_emit(const char* dir, char** json_paths);

#ifdef __cplusplus
}
#endif

#endif /* C2INV_C2INV_H */
