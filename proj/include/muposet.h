/* C interface to the pattern-order Mobius library. Objects cross the boundary
 * as opaque handles, failures as status codes; the message for the most
 * recent failure on the calling thread is available from
 * muposet_last_error(). Strings handed out through char** out-parameters are
 * malloc'd and must be released with muposet_string_free(). */

#ifndef MUPOSET_H
#define MUPOSET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct muposet_perm muposet_perm;
typedef struct muposet_report muposet_report;

typedef enum muposet_status {
  MUPOSET_OK = 0,
  MUPOSET_ERR_INVALID_ARGUMENT = 1, /* null handle or bad enum value */
  MUPOSET_ERR_INVALID_WORD = 2,     /* text that does not name a permutation */
  MUPOSET_ERR_OUT_OF_RANGE = 3,     /* numeric parameter outside its bounds */
  MUPOSET_ERR_OUT_OF_CLASS = 4,     /* permutation has the wrong descent shape */
  MUPOSET_ERR_NOT_CONTAINED = 5,
  MUPOSET_ERR_TOO_LARGE = 6,        /* interval too big to materialize */
  MUPOSET_ERR_OVERFLOW = 7,
  MUPOSET_ERR_DOMAIN = 8,
  MUPOSET_ERR_INTERNAL = 9
} muposet_status;

typedef enum muposet_format {
  MUPOSET_FORMAT_TEXT = 0,
  MUPOSET_FORMAT_JSON = 1,
  MUPOSET_FORMAT_CSV = 2
} muposet_format;

/* Message for the most recent failure on this thread; "" before any failure.
 * The storage belongs to the library, do not free it. */
const char* muposet_last_error(void);

void muposet_string_free(char* text);

/* Accepts "231" for short permutations and comma or space separated letters
 * ("10,1,2,...") for longer ones. */
muposet_status muposet_perm_parse(const char* text, muposet_perm** out);
muposet_status muposet_perm_from_values(const int* values, size_t count,
                                        muposet_perm** out);
void muposet_perm_free(muposet_perm* perm);
/* Length of the permutation, 0 for a null handle. */
int muposet_perm_length(const muposet_perm* perm);
muposet_status muposet_perm_to_string(const muposet_perm* perm, char** out);

/* Mobius function of the pattern order, by exhaustive recursion. */
muposet_status muposet_mobius(const muposet_perm* lower, const muposet_perm* upper,
                              long long* out);
/* Mobius from the single-letter permutation. */
muposet_status muposet_mobius_top(const muposet_perm* pi, long long* out);

/* One line per pattern of pi with length >= min_length: the pattern and its
 * Mobius value from the single-letter permutation, longest first. */
muposet_status muposet_downset_text(const muposet_perm* pi, int min_length,
                                    char** out);

/* Closed form for permutations with at most one descent. case_label may be
 * null when the caller only wants the value. */
muposet_status muposet_theorem4(const muposet_perm* pi, long long* value,
                                char** case_label);
muposet_status muposet_theorem4_explain(const muposet_perm* pi, char** out);

/* Conjectured interval value from sigma up to the length-2n target; shape is
 * 'M' (even letters first) or 'W' (odd letters first). detail may be null. */
muposet_status muposet_conjecture1(const muposet_perm* sigma, char shape, int n,
                                   long long* value, char** detail);

/* Conjectured interval value from the length-2m M-shaped permutation up to pi. */
muposet_status muposet_conjecture2(int m, const muposet_perm* pi, long long* value);
/* The intermediate quantities behind muposet_conjecture2, one per line. */
muposet_status muposet_conjecture2_stats(int m, const muposet_perm* pi, char** out);

/* Exhaustive comparison campaigns; jobs <= 0 means use the hardware thread
 * count. The report is independent of jobs apart from its runtime field. */
muposet_status muposet_verify_theorem4(int max_n, int jobs, muposet_report** out);
muposet_status muposet_verify_conjecture1(int max_n, int jobs, muposet_report** out);
muposet_status muposet_verify_conjecture2(int max_m, int max_n, int jobs,
                                          muposet_report** out);
muposet_status muposet_verify_lemmas(int max_n, int jobs, muposet_report** out);

void muposet_report_free(muposet_report* report);
/* Number of failed checks, -1 for a null handle. */
long long muposet_report_failed(const muposet_report* report);
muposet_status muposet_report_render(const muposet_report* report,
                                     muposet_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MUPOSET_H */
