/* C interface of the konig shared library.
 *
 * Handles are opaque; every function returns a konig_status and reports
 * results through out-parameters. Arrays are malloc'd by the library and
 * released with konig_ints_free; strings with konig_text_free. Error
 * messages for the most recent failure on the calling thread are available
 * via konig_last_error().
 *
 * Graph handles carry the full contents of a graph file: the graph itself
 * plus the optional declared matching ("m" lines) and parameter ("k" line).
 */
#ifndef KONIG_H
#define KONIG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum konig_status {
  KONIG_OK = 0,
  KONIG_ERR_PARSE = 1,   /* malformed input text */
  KONIG_ERR_INVALID = 2, /* precondition or contract violation */
  KONIG_ERR_GUARD = 3,   /* instance too large for an exact oracle */
  KONIG_ERR_NOMEM = 4,
  KONIG_ERR_INTERNAL = 5
} konig_status;

typedef struct konig_graph konig_graph;
typedef struct konig_cnf konig_cnf;

/* Message for the last failing call on this thread; empty string if none. */
const char* konig_last_error(void);

void konig_graph_free(konig_graph* g);
void konig_cnf_free(konig_cnf* c);
void konig_ints_free(int* p);
void konig_text_free(char* p);

/* ---- graph lifecycle -------------------------------------------------- */

konig_status konig_graph_parse(const char* text, konig_graph** out);
/* endpoints holds m pairs u1,v1,...,um,vm. */
konig_status konig_graph_build(int n, const int* endpoints, size_t m,
                               konig_graph** out);
/* Returns a copy of g carrying the given matching / parameter lines. */
konig_status konig_graph_with_matching(const konig_graph* g,
                                       const int* endpoints, size_t m,
                                       konig_graph** out);
konig_status konig_graph_with_param(const konig_graph* g, int k,
                                    konig_graph** out);

int konig_graph_vertex_count(const konig_graph* g);
size_t konig_graph_edge_count(const konig_graph* g);
/* Fills 2*edge_count ints in canonical order. */
konig_status konig_graph_edges(const konig_graph* g, int* endpoints);
int konig_graph_has_matching(const konig_graph* g);
size_t konig_graph_matching_size(const konig_graph* g);
konig_status konig_graph_matching_edges(const konig_graph* g, int* endpoints);
int konig_graph_has_param(const konig_graph* g);
int konig_graph_param(const konig_graph* g);
/* Canonical file text. */
konig_status konig_graph_to_text(const konig_graph* g, char** out);

/* ---- core algorithms --------------------------------------------------- */

/* Canonical matching text "s <size>" + "m <u> <v>" lines. */
konig_status konig_maximum_matching(const konig_graph* g, char** out);

/* *is_konig gets 0/1; *witness gets "KONIG\n..." or "NOT-KONIG\n". */
konig_status konig_recognize(const konig_graph* g, int* is_konig,
                             char** witness);

/* LP text: "vcf <p>/<q>" plus the S0 / Shalf / S1 lines. */
konig_status konig_lp(const konig_graph* g, char** out);

/* Minimum vertex cover by enumeration; vertex-set text. */
konig_status konig_brute_min_vc(const konig_graph* g, char** out);

/* Deletion solvers; *found gets 0/1 and *out the deletion text
 * ("s <size>" + "d <u> <v>" lines, or "s NO"). The keddfm variants use the
 * graph's declared matching. */
konig_status konig_brute_ked(const konig_graph* g, int k, int* found,
                             char** out);
konig_status konig_brute_ked_dfm(const konig_graph* g, int k, int* found,
                                 char** out);
konig_status konig_solve_keddfm(const konig_graph* g, int k, int* found,
                                char** out);

/* Independent-set demo solver (reduction + oracle, or direct enumeration
 * when k >= n/2); vertex-set text. */
konig_status konig_solve_is(const konig_graph* g, int k, int* found,
                            char** out);

/* ---- formulas ----------------------------------------------------------- */

konig_status konig_cnf_parse(const char* text, konig_cnf** out);
int konig_cnf_nvars(const konig_cnf* c);
long long konig_cnf_clause_count(const konig_cnf* c);
konig_status konig_cnf_to_text(const konig_cnf* c, char** out);

/* *sat gets 0/1; on success *out lists "v <lit>" assignments, on
 * unsatisfiable input it names the witness variable. */
konig_status konig_solve_2sat(const konig_cnf* c, int* sat, char** out);

/* Minimum clause deletion; clause-deletion text ("s <size>" + "d ... 0"). */
konig_status konig_almost_2sat(const konig_cnf* c, int k, int* found,
                               char** out);
konig_status konig_brute_almost_2sat(const konig_cnf* c, int k, int* found,
                                     char** out);

/* ---- reductions --------------------------------------------------------- */

konig_status konig_reduce_is2ked(const konig_graph* g, int k,
                                 konig_graph** out);
konig_status konig_reduce_a2sat2keddfm(const konig_cnf* c, int k,
                                       konig_graph** out, char** warnings);
konig_status konig_reduce_keddfm2a2sat(const konig_graph* g, int k,
                                       konig_cnf** out);

/* Solution lifting. Instance graphs must carry their "k" line (and "m"
 * lines for the keddfm directions); solutions are the solver output texts. */
konig_status konig_lift_is2ked(const konig_graph* reduced,
                               const char* vertex_set_text, char** out);
konig_status konig_lift_ked2is(const konig_graph* reduced,
                               const char* edge_deletion_text, char** out);
konig_status konig_lift_a2sat2keddfm(const konig_graph* instance, int k,
                                     const char* clause_deletion_text,
                                     char** out);
konig_status konig_lift_keddfm2a2sat(const konig_graph* instance, int k,
                                     const char* edge_deletion_text,
                                     char** out);

/* ---- verifiers ----------------------------------------------------------
 * Each accepts exactly the text produced by the corresponding solver and
 * sets *ok to 0/1. "NO" answers are re-derived and confirmed. */

konig_status konig_verify_matching(const konig_graph* g, const char* text,
                                   int* ok);
konig_status konig_verify_recognize(const konig_graph* g, const char* text,
                                    int* ok);
konig_status konig_verify_lp(const konig_graph* g, const char* text, int* ok);
konig_status konig_verify_ked(const konig_graph* g, int k, const char* text,
                              int* ok);
konig_status konig_verify_keddfm(const konig_graph* g, int k, const char* text,
                                 int* ok);
konig_status konig_verify_a2sat(const konig_cnf* c, int k, const char* text,
                                int* ok);

#ifdef __cplusplus
}
#endif

#endif /* KONIG_H */
