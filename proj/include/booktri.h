#ifndef BOOKTRI_H
#define BOOKTRI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bt_status {
    BT_OK = 0,
    BT_INVALID_ARGUMENT = 1,
    BT_INTERNAL_ERROR = 2
} bt_status;

/* Opaque undirected graph handle. */
typedef struct bt_graph bt_graph;

/* Message for the most recent failure on this thread; empty after success.
 * The pointer stays owned by the library. */
const char* bt_last_error(void);

/* Releases a string returned through a char** out-parameter. */
void bt_string_free(char* s);

void bt_graph_free(bt_graph* g);

/* Parses one graph6 code (an optional ">>graph6<<" prefix is accepted). */
bt_status bt_graph_from_graph6(const char* line, bt_graph** out);

/* The prism blow-up with part sizes (b, b, floor((n-4b)/2), b, b,
 * ceil((n-4b)/2)); requires an integer b with n/6 <= b <= n/4. */
bt_status bt_graph_s_bn(int n, int b, bt_graph** out);

bt_status bt_graph_complete_bipartite(int p, int q, bt_graph** out);

/* Prism blow-up with the given six part sizes (total in [1, 256]). */
bt_status bt_graph_prism_blowup(const long long sizes[6], bt_graph** out);

bt_status bt_graph_to_graph6(const bt_graph* g, char** out);

/* Number of vertices, or -1 when g is null. */
int bt_graph_order(const bt_graph* g);

/* Edge, triangle, book, K4 and related counts as a JSON object. */
bt_status bt_invariants_json(const bt_graph* g, char** out_json);

/* The book-count inequality sides for one graph as a JSON object. */
bt_status bt_bn_check_json(const bt_graph* g, char** out_json);

/* Exhaustive scan of all six-part prism blow-up compositions of n against
 * the triangle-count bound b*b*(n-4b); requires n/6 <= b < n/4.
 * workers = 0 picks the hardware concurrency. */
bt_status bt_verify_blowups_json(long long n, long long b, int workers,
                                 char** out_json);

/* Runs the shift adjustment on a six-entry part vector. entries_json is a
 * JSON array of six rationals (strings like "7/2" or numbers); b_rational
 * is a single rational. */
bt_status bt_adjust_trace_json(const char* entries_json,
                               const char* b_rational, char** out_json);

/* Randomized dual evaluation of the shift/transform identities. */
bt_status bt_identity_suite_json(unsigned long long seed, long long trials,
                                 char** out_json);

/* Six-part decomposition of a dense graph. params_json may be null or a
 * JSON object overriding any of: tau0, tau_tri, c0, tau1, c1, b,
 * iterate_bad_sets. */
bt_status bt_decompose_json(const bt_graph* g, const char* params_json,
                            char** out_json);

/* Decomposition plus the exceptional-set split and the certificate of the
 * three vector-function sign conditions. */
bt_status bt_classify_json(const bt_graph* g, const char* params_json,
                           char** out_json);

/* Scan of every edge subset of K_n (n <= 8) with at least edge_min edges.
 * config_json may be null or override any of: n, edge_min,
 * check_rademacher, check_edwards, check_bn, chunks. */
bt_status bt_exhaustive_scan_json(const char* config_json, char** out_json);

/* Simulated annealing minimizing triangles under the edge floor and book
 * cap. config_json may be null or override any of: n, b, seed, iters,
 * restarts, workers, t_start, t_end. */
bt_status bt_anneal_json(const char* config_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BOOKTRI_H */
