/*
 * crossflip — balanced triangulations of combinatorial manifolds:
 * bistellar flips, cross-flips, shellings, and pseudo-cobordisms.
 *
 * C API over an opaque-handle core. Every function returns CF_OK or an error
 * code; cf_last_error() describes the most recent failure on the calling
 * thread. Strings returned through char** are heap-allocated; release them
 * with cf_string_free().
 */
#ifndef CROSSFLIP_H
#define CROSSFLIP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CF_OK 0
#define CF_ERR_DOMAIN 1   /* precondition or domain violation */
#define CF_ERR_PARSE 2    /* malformed input text */
#define CF_ERR_BUDGET 3   /* search budget exhausted (not a negative answer) */
#define CF_ERR_INTERNAL 4 /* library invariant failed */
#define CF_ERR_IO 5       /* filesystem problem */

typedef struct cf_complex cf_complex;
typedef struct cf_coloring cf_coloring;
typedef struct cf_catalog cf_catalog;
typedef struct cf_report cf_report;
typedef struct cf_cobordism cf_cobordism;

const char* cf_version(void);
const char* cf_last_error(void);

void cf_string_free(char* s);
void cf_complex_free(cf_complex* c);
void cf_coloring_free(cf_coloring* k);
void cf_catalog_free(cf_catalog* c);
void cf_report_free(cf_report* r);
void cf_cobordism_free(cf_cobordism* o);

/* ---- complexes ------------------------------------------------------- */

/* Facet-list text: one facet per line, labels whitespace-separated, '#'
 * comments. Serialization is canonical (sorted facets, sorted vertices). */
int cf_complex_parse_text(const char* text, cf_complex** out);
int cf_complex_to_text(const cf_complex* c, char** out);
/* Structured form: {"facets": [[...]], "colors"?: {...}, "palette"?: n} */
int cf_complex_parse_json(const char* text, cf_complex** out, cf_coloring** colors_out);
int cf_complex_to_json(const cf_complex* c, const cf_coloring* colors, char** out);

/* kind: simplex | simplex-boundary | cross-polytope | bipyramid.
 * param: dimension (simplex kinds, cross-polytope) or gon size (bipyramid).
 * colors_out (optional) receives the canonical coloring where one exists. */
int cf_generate(const char* kind, long long param, cf_complex** out, cf_coloring** colors_out);
int cf_barycentric(const cf_complex* in, cf_complex** out, cf_coloring** colors_out);

int cf_classify_json(const cf_complex* c, char** out);
int cf_f_vector_json(const cf_complex* c, char** out);
int cf_canonical_key(const cf_complex* c, char** out);
int cf_isomorphic(const cf_complex* a, const cf_complex* b, int* yes);

/* ---- colorings -------------------------------------------------------- */

/* Text format: header "m <palette>", then "<vertex> <color>" lines. */
int cf_coloring_parse_text(const char* text, cf_coloring** out);
int cf_coloring_to_text(const cf_coloring* k, char** out);
int cf_is_proper(const cf_complex* c, const cf_coloring* k, int* proper);
int cf_find_coloring(const cf_complex* c, int m, int* found, cf_coloring** out);
/* Theorem-style extension: L' is a stellar subdivision of L away from K, the
 * output coloring is proper and extends kappa; log_json replays the
 * subdivisions. */
int cf_extend_coloring(const cf_complex* L, const cf_complex* K, const cf_coloring* kappa, int m,
                       cf_complex** L_out, cf_coloring** coloring_out, char** log_json);

/* ---- flips ------------------------------------------------------------ */

int cf_available_flips_json(const cf_complex* c, char** out);
/* move_json: {"kind":"bistellar","A":[...],"B":[...]} or a cross-flip record
 * as produced in catalogs/reports. coloring may be NULL. */
int cf_apply_move_json(const cf_complex* c, const cf_coloring* coloring, const char* move_json,
                       cf_complex** out, cf_coloring** coloring_out);

/* ---- cross-flip catalogs ---------------------------------------------- */

int cf_catalog_enumerate(int d, const char* mode, cf_catalog** out);
int cf_catalog_to_json(const cf_catalog* c, char** out);
int cf_catalog_parse_json(const char* text, cf_catalog** out);
int cf_catalog_size(const cf_catalog* c, int* out);

/* ---- reductions ------------------------------------------------------- */

int cf_reduce_balanced(const cf_complex* c, const cf_coloring* k, cf_report** out);
int cf_heuristic_reduce(const cf_complex* c, const cf_catalog* catalog, long long budget,
                        uint64_t seed, cf_report** out);
int cf_bistellar_reduce(const cf_complex* c, long long budget, uint64_t seed, cf_report** out);
int cf_colored_connect(const cf_complex* a, const cf_coloring* ka, const cf_complex* b,
                       const cf_coloring* kb, cf_report** out);
int cf_connect_balanced(const cf_complex* a, const cf_complex* b, long long budget, uint64_t seed,
                        cf_report** out);

int cf_report_to_json(const cf_report* r, char** out);
int cf_report_parse_json(const char* text, cf_report** out);
int cf_report_success(const cf_report* r, int* out);
/* Re-applies every recorded move; ok = 1 iff the path reproduces the end
 * complex bit-exactly. */
int cf_report_replay(const cf_report* r, int* ok, char** error_out);

/* ---- pseudo-cobordisms ------------------------------------------------ */

int cf_cobordism_parse_json(const char* text, cf_cobordism** out);
int cf_cobordism_to_json(const cf_cobordism* o, char** out);
/* Summary: degree trichotomy, end conditions, bidirectional shellability and
 * a witness order when one is found. */
int cf_cobordism_verify_json(const cf_cobordism* o, char** out);
int cf_cobordism_elementary(const cf_complex* c, const char* move_json, cf_cobordism** out);
int cf_cobordism_compose(const cf_cobordism* a, const cf_cobordism* b, cf_cobordism** out);
/* Flip list (paper order) with the intermediate complexes checked. */
int cf_cobordism_decompose_json(const cf_cobordism* o, char** out);
/* tau_labels: whitespace-separated vertex labels of the face to eliminate. */
int cf_eliminate_face(const cf_complex* c, const char* tau_labels, cf_complex** delta_prime,
                      cf_cobordism** out);
/* flips_json may be NULL or a [[...]] list of {"A":...,"B":...} records. */
int cf_disjoint_ends(const cf_complex* c, const char* flips_json, cf_cobordism** out);
int cf_cobordism_subdivide(const cf_cobordism* o, const char* sigma_labels, cf_cobordism** out);

#ifdef __cplusplus
}
#endif

#endif /* CROSSFLIP_H */
