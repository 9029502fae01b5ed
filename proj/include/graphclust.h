/* graphclust — generalized clustering coefficients, motif census, and
 * maximal-clique analysis behind a C shared-library API.
 *
 * All functions return gc_status; results are handed back either as an
 * opaque graph handle or as a heap-allocated UTF-8 string (JSON, CSV, or
 * edge-list text) that the caller releases with gc_string_free. A failing
 * call leaves outputs untouched; gc_last_error() describes the failure for
 * the current thread.
 */
#ifndef GRAPHCLUST_H
#define GRAPHCLUST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gc_graph gc_graph;

typedef enum {
  GC_OK = 0,
  GC_ERR_VALIDATION = 1,  /* bad input, parse error, precondition violation */
  GC_ERR_UNDEFINED = 2,   /* coefficient has a zero denominator */
  GC_ERR_RESOURCE = 3,    /* cap exceeded, sampling exhausted, overflow */
  GC_ERR_IO = 4
} gc_status;

/* Message for the most recent failing call on this thread. */
const char* gc_last_error(void);

void gc_string_free(char* s);

/* ---- graph construction -------------------------------------------- */

/* Edge-list text: one edge per line, two whitespace-separated labels,
 * '#' comments, blank lines ignored. */
gc_status gc_graph_from_edge_list(const char* text, gc_graph** out);
gc_status gc_graph_from_file(const char* path, gc_graph** out);

/* Generator spec as JSON, e.g.
 * {"family":"chain_clique","n":10,"b":4} or
 * {"family":"gnp","n":30,"p":0.5,"seed":7}. */
gc_status gc_graph_generate(const char* spec_json, gc_graph** out);

void gc_graph_free(gc_graph* g);

int gc_graph_node_count(const gc_graph* g);
int gc_graph_edge_count(const gc_graph* g);
int gc_graph_is_connected(const gc_graph* g);

/* Canonical edge-list text: smaller label first, lines sorted. */
gc_status gc_graph_to_edge_list(const gc_graph* g, char** out_text);

/* ---- analysis ------------------------------------------------------- */

/* Full ten-count census as JSON {"M3_3":...,...,"M1023_5":...} or as a
 * one-row CSV with the same headers. */
gc_status gc_census_json(const gc_graph* g, char** out);
gc_status gc_census_csv(const gc_graph* g, char** out);

/* C(b) as JSON {b, cliques, spanning_trees, cayley, value_num, value_den,
 * value}. use_naive selects the nested-loop oracle path. */
gc_status gc_clustering_json(const gc_graph* g, int b, int use_naive, char** out);

/* Maximal cliques (Bron-Kerbosch). Any of list/distribution/degree_stats
 * may be set; max_cliques = 0 means the default cap of 1e6. */
gc_status gc_cliques_json(const gc_graph* g, int list, int distribution,
                          int degree_stats, size_t max_cliques, char** out);
gc_status gc_cliques_histogram_csv(const gc_graph* g, size_t max_cliques, char** out);

/* Analytic-vs-oracle comparison for b in {3,4,5}:
 * {b, analytic:{...}, oracle:{...}, match, mismatches:[...]}. */
gc_status gc_verify_json(const gc_graph* g, int b, char** out);

/* Snapshot directory scan; corr != 0 appends the Pearson/permutation
 * correlation matrix computed with `permutations` shuffles. */
gc_status gc_series_json(const char* directory, int corr, int permutations, char** out);

/* Analytic-vs-naive timing harness over connected G(n, p) draws.
 * statistics_csv is e.g. "c3,c4,c5". Output: CSV with header
 * algorithm,statistic,n,p,rep,seed,seconds,value_num,value_den. */
gc_status gc_bench_csv(const int* sizes, size_t n_sizes, double p, int reps,
                       const char* statistics_csv, uint64_t seed, char** out);

/* Expected C(b) on G(n,p): {"b":...,"p":...,"exponent":...,"value":...}. */
gc_status gc_expected_c_gnp_json(int b, double p, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHCLUST_H */
