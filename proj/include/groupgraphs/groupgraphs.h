/* C interface to the groupgraphs library. All handles are opaque; every
 * function returns a gg_status and reports details through gg_last_error(). */
#ifndef GROUPGRAPHS_H
#define GROUPGRAPHS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GG_API __declspec(dllexport)
#else
#define GG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gg_status {
  GG_OK = 0,
  GG_ERR_PARSE = 1,
  GG_ERR_DOMAIN = 2,
  GG_ERR_ORDER_CAP = 3,
  GG_ERR_IO = 4,
  GG_ERR_UNSUPPORTED = 5,
  GG_ERR_REFUSED = 6,
  GG_ERR_INVALID_ARGUMENT = 7,
  GG_ERR_INTERNAL = 8
} gg_status;

typedef enum gg_graph_kind {
  GG_GRAPH_POWER = 0,
  GG_GRAPH_COMMUTING = 1,
  GG_GRAPH_ENHANCED = 2,
  GG_GRAPH_ENHANCED_DELETED = 3,
  GG_GRAPH_ENHANCED_PROPER = 4,
  GG_GRAPH_KIND_MAX_ = 0x7fffffff /* keeps the enum int-sized so any int can be validated */
} gg_graph_kind;

typedef enum gg_format {
  GG_FORMAT_CSV = 0,
  GG_FORMAT_JSON = 1,
  GG_FORMAT_TEXT = 2,
  GG_FORMAT_DOT = 3,
  GG_FORMAT_MAX_ = 0x7fffffff
} gg_format;

typedef enum gg_outcome { GG_PASS = 0, GG_FAIL = 1, GG_HYPOTHESIS_NOT_MET = 2, GG_ERROR = 3 } gg_outcome;

typedef struct gg_group gg_group;
typedef struct gg_graph gg_graph;
typedef struct gg_report gg_report;

/* Message for the last failing call on this thread ("" if none). */
GG_API const char* gg_last_error(void);
GG_API const char* gg_status_string(gg_status status);
/* Frees strings returned through char** out-parameters. */
GG_API void gg_string_free(char* s);

/* order_cap 0 selects the default cap (10080). */
GG_API gg_status gg_group_create(const char* spec, uint64_t order_cap, gg_group** out);
GG_API void gg_group_destroy(gg_group* g);
GG_API gg_status gg_group_order(const gg_group* g, uint64_t* out);
GG_API gg_status gg_group_spec_string(const gg_group* g, char** out);
GG_API gg_status gg_group_element_order(const gg_group* g, uint32_t element, uint32_t* out);
GG_API gg_status gg_group_label(const gg_group* g, uint32_t element, char** out);
GG_API gg_status gg_group_multiply(const gg_group* g, uint32_t a, uint32_t b, uint32_t* out);
/* Order, abelian flag and element-order histogram as text or JSON. */
GG_API gg_status gg_group_describe(const gg_group* g, gg_format format, char** out);

GG_API gg_status gg_graph_create(const gg_group* g, gg_graph_kind kind, gg_graph** out);
GG_API void gg_graph_destroy(gg_graph* graph);
GG_API gg_status gg_graph_vertex_count(const gg_graph* graph, size_t* out);
GG_API gg_status gg_graph_edge_count(const gg_graph* graph, size_t* out);
GG_API gg_status gg_graph_components(const gg_graph* graph, size_t* out);
/* Writes up to `capacity` element ids to `elements` and the full count to *count. */
GG_API gg_status gg_graph_dominating(const gg_graph* graph, uint32_t* elements, size_t capacity, size_t* count);
GG_API gg_status gg_graph_is_complete(const gg_graph* graph, int* out);
/* -1 for disconnected or empty graphs. */
GG_API gg_status gg_graph_diameter(const gg_graph* graph, int64_t* out);

typedef struct gg_connectivity {
  size_t kappa;
  int has_certificate;
  uint32_t* cut; /* element ids, sorted by vertex position */
  size_t cut_size;
  uint32_t separated[2];
} gg_connectivity;

GG_API gg_status gg_graph_connectivity(const gg_graph* graph, gg_connectivity* out);
GG_API void gg_connectivity_release(gg_connectivity* c);
/* format: GG_FORMAT_DOT or GG_FORMAT_JSON. */
GG_API gg_status gg_graph_export(const gg_graph* graph, gg_format format, char** out);

GG_API size_t gg_theorem_count(void);
GG_API const char* gg_theorem_name(size_t index);
GG_API const char* gg_theorem_statement(size_t index);

GG_API gg_status gg_verify_group(const char* theorem, const char* spec, uint64_t order_cap, gg_report** out);

typedef struct gg_sweep_options {
  const char* family; /* NULL: the theorem's default family and range */
  uint32_t min;
  uint32_t max;
  uint64_t max_order;
  unsigned workers;
  uint64_t order_cap;
  int slow;
} gg_sweep_options;

GG_API gg_status gg_verify_sweep(const char* theorem, const gg_sweep_options* options, gg_report** out);
GG_API void gg_report_destroy(gg_report* r);
GG_API gg_status gg_report_count(const gg_report* r, size_t* out);
GG_API gg_status gg_report_outcome(const gg_report* r, size_t index, gg_outcome* out);
GG_API gg_status gg_report_failures(const gg_report* r, size_t* out);
GG_API gg_status gg_report_render(const gg_report* r, gg_format format, int timing, char** out);

#ifdef __cplusplus
}
#endif

#endif
