/* C interface to the mcover library.
 *
 * Every call returns an mcover_status. On failure the message is available
 * from mcover_last_error() on the same thread until the next call. Strings
 * returned through char** are owned by the caller and released with
 * mcover_string_free(). */
#ifndef MCOVER_H
#define MCOVER_H

#include <stdint.h>

#if defined(_WIN32)
#define MCOVER_API __declspec(dllexport)
#else
#define MCOVER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define MCOVER_ABI_VERSION 1

typedef enum mcover_status {
  MCOVER_OK = 0,
  MCOVER_E_INVALID_ARGUMENT = 1,
  MCOVER_E_DIMENSION_MISMATCH = 2,
  MCOVER_E_PARSE = 3,
  MCOVER_E_IO = 4,
  MCOVER_E_GRAPH6_MULTIGRAPH = 5,
  MCOVER_E_NO_PERFECT_MATCHING = 6,
  MCOVER_E_NOT_MATCHING_COVERED = 7,
  MCOVER_E_INCOMPLETE = 8,
  MCOVER_E_BUDGET_EXHAUSTED = 9,
  MCOVER_E_DIMENSION_TOO_LARGE = 10,
  MCOVER_E_INVALID_PARAMETER = 11,
  MCOVER_E_EDGE_NOT_IN_GRAPH = 12,
  MCOVER_E_NOT_EQUIVALENT = 13,
  MCOVER_E_COLORING_MISMATCH = 14,
  MCOVER_E_INTERNAL = 15
} mcover_status;

typedef struct mcover_graph mcover_graph;

MCOVER_API int mcover_abi_version(void);
MCOVER_API const char* mcover_status_name(mcover_status status);
MCOVER_API const char* mcover_last_error(void);
MCOVER_API void mcover_string_free(char* s);

/* edges holds 2*m vertex ids (u0, v0, u1, v1, ...). */
MCOVER_API mcover_status mcover_graph_create(int n, const int* edges, int m, mcover_graph** out);
/* format: "graph6", "edgelist" or "json". */
MCOVER_API mcover_status mcover_graph_parse(const char* text, const char* format, mcover_graph** out);
/* format may be NULL to pick by file extension. */
MCOVER_API mcover_status mcover_graph_read(const char* path, const char* format, mcover_graph** out);
MCOVER_API mcover_status mcover_graph_write(const mcover_graph* g, const char* format, char** out);
MCOVER_API void mcover_graph_free(mcover_graph* g);
MCOVER_API int mcover_graph_num_vertices(const mcover_graph* g);
MCOVER_API int mcover_graph_num_edges(const mcover_graph* g);
MCOVER_API mcover_status mcover_graph_edge(const mcover_graph* g, int e, int* u, int* v);

/* options_json may be NULL: {"max_pms": N, "seed": S}. */
MCOVER_API mcover_status mcover_analyze(const mcover_graph* g, const char* options_json, char** out_json);
/* Validates a report produced by mcover_analyze; out_json lists mismatches. */
MCOVER_API mcover_status mcover_validate_report(const char* report_json, char** out_json);
MCOVER_API mcover_status mcover_feasible(const mcover_graph* g, const int* edges, int count, uint64_t max_pms,
                                         char** out_json);
MCOVER_API mcover_status mcover_decompose(const mcover_graph* g, int single_only, uint64_t budget, char** out_json);

/* request_json: {"construction": "qr" | "petersen" | "complete" | "complete-bipartite" | "splice" | "chain"
 * | "cycle" | "star", ...parameters}. The certificate comes back verified. */
MCOVER_API mcover_status mcover_construct(const char* request_json, char** out_json);
MCOVER_API mcover_status mcover_verify_certificate(const char* certificate_json, uint64_t max_pms, char** out_json);

/* options_json may be NULL: {"max_n": N, "seed": S, "trials": T}. */
MCOVER_API mcover_status mcover_verify_suite(const char* suite, const char* options_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
