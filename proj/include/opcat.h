#ifndef OPCAT_H
#define OPCAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  OPCAT_OK = 0,
  OPCAT_CHECK_FAILED = 1,
  OPCAT_ERR_PARSE = 2,
  OPCAT_ERR_VALIDATION = 3,
  OPCAT_ERR_DOMAIN = 4,
  OPCAT_ERR_BOUND = 5,
  OPCAT_ERR_INTERNAL = 6,
  OPCAT_ERR_ARGUMENT = 7
} opcat_status;

typedef struct opcat_report opcat_report;
typedef struct opcat_operad opcat_operad;
typedef struct opcat_space opcat_space;

const char* opcat_version(void);
size_t opcat_command_count(void);
const char* opcat_command_name(size_t i);
/* Message of the last failed call on this thread; empty if none. */
const char* opcat_last_error(void);

/* Runs a subcommand. manifest_json and options_json are JSON texts; options_json may be NULL.
   On OPCAT_OK or OPCAT_CHECK_FAILED *out holds the report; otherwise *out is NULL. */
opcat_status opcat_run(const char* command, const char* manifest_json, const char* options_json, opcat_report** out);
/* Deterministic JSON text, indented by indent spaces (negative: compact). Owned by the report. */
const char* opcat_report_json(opcat_report* r, int indent);
int opcat_report_ok(const opcat_report* r);
void opcat_report_free(opcat_report* r);

/* Operads by name ("assoc", "comm", "end") truncated at bound arity. */
opcat_status opcat_operad_new(const char* name, size_t points, size_t bound, opcat_operad** out);
size_t opcat_operad_bound(const opcat_operad* op);
size_t opcat_operad_card(const opcat_operad* op, size_t arity);
/* Runs the operad axiom suite; *out receives the report. */
opcat_status opcat_operad_check(const opcat_operad* op, opcat_report** out);
void opcat_operad_free(opcat_operad* op);

/* A based simplicial set from a space description (same JSON as manifests' "space"), through
   the given level. */
opcat_status opcat_space_new(const char* space_json, size_t levels, opcat_space** out);
size_t opcat_space_levels(const opcat_space* s);
size_t opcat_space_size(const opcat_space* s, size_t level);
/* Rank and number of torsion factors of H_q for q <= degree (needs levels > degree). */
opcat_status opcat_space_homology(const opcat_space* s, size_t degree, size_t* ranks, size_t* torsion_counts);
void opcat_space_free(opcat_space* s);

#ifdef __cplusplus
}
#endif

#endif
