/* C interface to the mcat library: multi-Catalan tableaux and the
 * two-species exclusion process, in exact arithmetic.
 *
 * Conventions:
 *  - Functions return an mcat_status. On any status other than MCAT_OK and
 *    MCAT_CHECK_FAILED, out-parameters are left untouched and
 *    mcat_last_error() describes the failure (per thread).
 *  - Strings returned through char** are heap-allocated and must be released
 *    with mcat_string_free().
 *  - Rationals are passed as "p" or "p/q" strings.
 *  - Verification functions always produce a report; they return
 *    MCAT_CHECK_FAILED when the check ran and did not pass.
 */
#ifndef MCAT_H
#define MCAT_H

#include <stddef.h>

#if defined(MCAT_BUILDING)
#define MCAT_API __attribute__((visibility("default")))
#else
#define MCAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcat_status {
  MCAT_OK = 0,
  MCAT_CHECK_FAILED = 1,
  MCAT_INVALID_ARGUMENT = 2,
  MCAT_NOT_IRREDUCIBLE = 3,
  MCAT_SINGULAR = 4,
  MCAT_INTERNAL_ERROR = 5
} mcat_status;

typedef enum mcat_format {
  MCAT_FORMAT_JSON = 0,
  MCAT_FORMAT_CSV = 1,
  MCAT_FORMAT_ASCII = 2,
  MCAT_FORMAT_DOT = 3
} mcat_format;

typedef struct mcat_word mcat_word;
typedef struct mcat_poly mcat_poly;
typedef struct mcat_params mcat_params;
typedef struct mcat_grid mcat_grid;
typedef struct mcat_ruleset mcat_ruleset;
typedef struct mcat_report mcat_report;

MCAT_API const char* mcat_version(void);
MCAT_API const char* mcat_last_error(void);
MCAT_API void mcat_string_free(char* s);

/* Words. On a parse error *error_index (if non-null) receives the index of
 * the first bad character. */
MCAT_API mcat_status mcat_word_parse(const char* text, mcat_word** out, size_t* error_index);
MCAT_API void mcat_word_free(mcat_word* w);
MCAT_API int mcat_word_length(const mcat_word* w);
/* Number of occurrences of 'D', 'E' or 'A'; -1 for any other letter. */
MCAT_API int mcat_word_count(const mcat_word* w, char letter);
MCAT_API mcat_status mcat_word_string(const mcat_word* w, char** out);
MCAT_API mcat_status mcat_word_shape_json(const mcat_word* w, char** out);
MCAT_API mcat_status mcat_word_decompose_json(const mcat_word* w, char** out);

/* Weight polynomials in alpha, beta (and q). */
MCAT_API mcat_status mcat_word_weight(const mcat_word* w, mcat_poly** out);
MCAT_API mcat_status mcat_partition_function(int m, int r, mcat_poly** out);
MCAT_API void mcat_poly_free(mcat_poly* p);
MCAT_API mcat_status mcat_poly_text(const mcat_poly* p, char** out);
MCAT_API mcat_status mcat_poly_json(const mcat_poly* p, char** out);
MCAT_API mcat_status mcat_poly_eval(const mcat_poly* p, const char* alpha, const char* beta, const char* q,
                                    char** out);

/* Rates, grids of (alpha, beta) points and q=1 rule sets. */
MCAT_API mcat_status mcat_params_create(const char* alpha, const char* beta, const char* q, mcat_params** out);
MCAT_API void mcat_params_free(mcat_params* p);
/* "a/b,c/d;e,f" */
MCAT_API mcat_status mcat_grid_parse(const char* text, mcat_grid** out);
MCAT_API mcat_grid* mcat_grid_default(void);
MCAT_API size_t mcat_grid_size(const mcat_grid* g);
MCAT_API void mcat_grid_free(mcat_grid* g);
MCAT_API mcat_ruleset* mcat_ruleset_default(void);
MCAT_API mcat_status mcat_ruleset_from_json(const char* json, mcat_ruleset** out);
MCAT_API void mcat_ruleset_free(mcat_ruleset* r);

/* Rendered outputs. */
/* All tableaux of a word, condensed (staircase = 0) or staircase; JSON or ASCII. */
MCAT_API mcat_status mcat_enumerate(const mcat_word* w, int staircase, mcat_format format, char** out);
/* Exact stationary law of the (m, r) sector; JSON or CSV. */
MCAT_API mcat_status mcat_stationary(int m, int r, const mcat_params* params, mcat_format format, char** out);
/* Tableau counts by number of D's for sector (m, r), or all r when r < 0.
 * With brute != 0 each row also carries the enumerated count. JSON or CSV. */
MCAT_API mcat_status mcat_count_table(int m, int r, int brute, mcat_format format, char** out);
/* Determinant matrices of the word's A-free blocks and the identity check (JSON). */
MCAT_API mcat_status mcat_det(const mcat_word* w, char** out);
/* The tableau chain of sector (m, r); JSON, CSV or DOT. */
MCAT_API mcat_status mcat_tableau_graph(int m, int r, mcat_format format, char** out);
/* Two-species alternative tableaux of a word; JSON or ASCII. */
MCAT_API mcat_status mcat_q1_enumerate(const mcat_word* w, const mcat_ruleset* rules, mcat_format format,
                                       char** out);

/* Verification. r < 0 means every r in [0, m]. A null grid means the default grid. */
MCAT_API mcat_status mcat_verify_main_theorem(int m, int r, const mcat_grid* grid, mcat_report** out);
MCAT_API mcat_status mcat_verify_ansatz(int m_max, mcat_report** out);
MCAT_API mcat_status mcat_verify_balance(int m, int r, const mcat_grid* grid, mcat_report** out);
MCAT_API mcat_status mcat_verify_projection(int m, int r, const mcat_grid* grid, mcat_report** out);
MCAT_API mcat_status mcat_q1_verify(int m, int r, const mcat_ruleset* rules, const mcat_grid* grid,
                                    mcat_report** out);
MCAT_API mcat_status mcat_q1_consistency(int m, int r, const mcat_ruleset* rules, mcat_report** out);
/* Sweeps the built-in candidate rule sets; passes if any candidate passes. */
MCAT_API mcat_status mcat_q1_sweep(int m_max, const mcat_grid* grid, mcat_report** out);

MCAT_API int mcat_report_passed(const mcat_report* r);
MCAT_API mcat_status mcat_report_json(const mcat_report* r, char** out);
MCAT_API void mcat_report_free(mcat_report* r);

#ifdef __cplusplus
}
#endif

#endif /* MCAT_H */
