/* C interface to the lapcert shared library.
 *
 * All functions returning lapcert_status leave a thread-local message
 * readable via lapcert_last_error() on failure. Strings returned through
 * char** out-parameters are heap-allocated; release them with
 * lapcert_string_free(). Graph handles are opaque and immutable.
 */
#ifndef LAPCERT_H
#define LAPCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LAPCERT_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LAPCERT_API __attribute__((visibility("default")))
#else
#define LAPCERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lapcert_graph lapcert_graph;

typedef enum lapcert_status {
  LAPCERT_OK = 0,
  LAPCERT_ERR_PARSE = 1,
  LAPCERT_ERR_PARAM = 2,
  LAPCERT_ERR_DOMAIN = 3,
  LAPCERT_ERR_NUMERIC = 4,
  LAPCERT_ERR_UNSUPPORTED = 5,
  LAPCERT_ERR_CAP = 6,
  LAPCERT_ERR_IO = 7,
  LAPCERT_ERR_UNKNOWN = 8
} lapcert_status;

LAPCERT_API const char* lapcert_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call. */
LAPCERT_API const char* lapcert_last_error(void);

/* strict != 0 rejects nonzero padding bits in the final graph6 byte. */
LAPCERT_API lapcert_status lapcert_graph_from_graph6(const char* text, int strict,
                                                     lapcert_graph** out);
LAPCERT_API lapcert_status lapcert_graph_from_edge_list(const char* text,
                                                        lapcert_graph** out);
/* spec examples: "path:10", "petersen", "gnp:20,0.5,7". */
LAPCERT_API lapcert_status lapcert_graph_from_family(const char* spec,
                                                     lapcert_graph** out);
/* endpoints holds 2*edge_count vertex ids: u0,v0,u1,v1,... */
LAPCERT_API lapcert_status lapcert_graph_from_edges(int32_t n, const int32_t* endpoints,
                                                    size_t edge_count,
                                                    lapcert_graph** out);
LAPCERT_API void lapcert_graph_free(lapcert_graph* g);

LAPCERT_API int32_t lapcert_graph_vertex_count(const lapcert_graph* g);
LAPCERT_API int64_t lapcert_graph_edge_count(const lapcert_graph* g);

LAPCERT_API lapcert_status lapcert_graph_to_graph6(const lapcert_graph* g, char** out);
LAPCERT_API lapcert_status lapcert_graph_to_edge_list(const lapcert_graph* g, char** out);
LAPCERT_API void lapcert_string_free(char* s);

/* Laplacian eigenvalues in ascending order; `values` must have room for
 * lapcert_graph_vertex_count(g) doubles. */
LAPCERT_API lapcert_status lapcert_spectrum(const lapcert_graph* g, double* values);

/* Runs the full corpus scan. config_json follows the documented scan-config
 * schema; *report_out receives the rendered report; violations_out (may be
 * NULL) receives the violation count. Violations do not fail the call. */
LAPCERT_API lapcert_status lapcert_scan_json(const char* config_json, char** report_out,
                                             int64_t* violations_out);

#ifdef __cplusplus
}
#endif

#endif /* LAPCERT_H */
