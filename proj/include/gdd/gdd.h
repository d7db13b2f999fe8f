/* C interface to the good-deformation-data workbench.
 *
 * Opaque handles and integer status codes; every entry point traps C++
 * exceptions. Reports carry a verdict (yes/no), stable machine-readable
 * lines, optional file-format artifacts, and renderings. Strings returned
 * through char** are heap-allocated and released with gdd_string_free.
 */
#ifndef GDD_H
#define GDD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gdd_status {
    GDD_OK = 0,
    GDD_ERR_INVALID_ARGUMENT = 1,
    GDD_ERR_PARSE = 2,
    GDD_ERR_RESOURCE_LIMIT = 3,
    GDD_ERR_INTERNAL = 4
} gdd_status;

/* What a successful run concluded. */
typedef enum gdd_verdict {
    GDD_VERDICT_YES = 0, /* valid / found / verified */
    GDD_VERDICT_NO = 1   /* invalid / empty / condition fails */
} gdd_verdict;

typedef struct gdd_report gdd_report;

const char* gdd_version(void);
void gdd_string_free(char* s);
void gdd_report_free(gdd_report* r);

gdd_verdict gdd_report_verdict(const gdd_report* r);
size_t gdd_report_line_count(const gdd_report* r);
/* borrowed pointer, valid while the report lives */
const char* gdd_report_line(const gdd_report* r, size_t i);
/* serialized result objects (datum / space files); borrowed pointers */
size_t gdd_report_artifact_count(const gdd_report* r);
const char* gdd_report_artifact(const gdd_report* r, size_t i);
/* full rendering (machine != 0 for the line-oriented stable form);
 * caller frees with gdd_string_free */
char* gdd_report_render(const gdd_report* r, int machine);

typedef struct gdd_search_options {
    int64_t node_budget;         /* <= 0: default */
    int shards;                  /* <= 0: 1 */
    int64_t field_order_limit;   /* <= 0: default 729 */
    int all_residue_assignments; /* nonzero: ignore the pinned residue profiles */
    const char* checkpoint_path; /* NULL: no checkpointing */
} gdd_search_options;

void gdd_search_options_init(gdd_search_options* o);

gdd_status gdd_verify_datum(const char* text, gdd_report** out, char** err);
gdd_status gdd_verify_space(const char* text, gdd_report** out, char** err);
gdd_status gdd_partition_condition(int64_t p, const int64_t* h, size_t n, gdd_report** out,
                                   char** err);
gdd_status gdd_block_structure(int64_t p, const int64_t* h, size_t n, gdd_report** out,
                               char** err);
gdd_status gdd_search_datum(int64_t p, int k, const int64_t* h, size_t n,
                            const gdd_search_options* opts, gdd_report** out, char** err);
gdd_status gdd_search_space(int lambda, int k_max, const gdd_search_options* opts,
                            gdd_report** out, char** err);
/* step_or_null: run the single named certificate step, or the whole pipeline */
gdd_status gdd_certify(const char* step_or_null, gdd_report** out, char** err);
gdd_status gdd_enumerate_types(int64_t p, int lambda, gdd_report** out, char** err);

/* cooperative interruption of a running search (async-signal-safe) */
void gdd_interrupt(void);

#ifdef __cplusplus
}
#endif

#endif /* GDD_H */
