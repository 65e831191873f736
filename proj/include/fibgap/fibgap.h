/*
 * C interface to libfibgap: gap words, kernels and occurrence positions of
 * factors of the infinite Fibonacci word.
 *
 * Every function returns an fg_status. On failure fg_last_error() holds a
 * message for the calling thread. Objects returned through out-parameters
 * are owned by the caller and released with the matching *_free function.
 * Words are NUL-terminated strings over 'a' and 'b'; gaps use "" (empty),
 * "w" (separated) and "-w" (inverse of an overlap).
 */
#ifndef FIBGAP_FIBGAP_H
#define FIBGAP_FIBGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#ifdef FIBGAP_BUILDING
#define FG_API __declspec(dllexport)
#else
#define FG_API __declspec(dllimport)
#endif
#else
#define FG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fg_status {
    FG_OK = 0,
    FG_ERR_INVALID_ARGUMENT = 1,
    FG_ERR_NOT_FACTOR = 2,
    FG_ERR_SPECIAL_WORD = 3,
    FG_ERR_INCOMPLETE_CANCELLATION = 4,
    FG_ERR_INTERNAL = 5
} fg_status;

typedef enum fg_factor_type {
    FG_T1_1 = 0,
    FG_T1_2 = 1,
    FG_T1_3 = 2,
    FG_T2_1 = 3,
    FG_T2_2 = 4,
    FG_T2_3 = 5
} fg_factor_type;

typedef struct fg_classification {
    fg_factor_type type;
    uint64_t n;
    int k;
    int64_t i; /* 0 and unused for T1.1 */
} fg_classification;

FG_API const char* fg_last_error(void);
FG_API const char* fg_status_name(fg_status status);
FG_API const char* fg_factor_type_name(fg_factor_type type);

/* ---- owned strings ---------------------------------------------------- */

typedef struct fg_string fg_string;

FG_API const char* fg_string_data(const fg_string* s);
FG_API size_t fg_string_size(const fg_string* s);
FG_API void fg_string_free(fg_string* s);

/* ---- words ------------------------------------------------------------ */

FG_API fg_status fg_fib_number(int k, uint64_t* out);
FG_API fg_status fg_fib_prefix(uint64_t length, fg_string** out);
FG_API fg_status fg_fib_standard_word(int k, fg_string** out);
FG_API fg_status fg_singular_word(int k, fg_string** out);
FG_API fg_status fg_letter_at(uint64_t p, char* out);
FG_API fg_status fg_is_factor(const char* word, int* out);

/* ---- classified factors ----------------------------------------------- */

/* Analysis of one non-special factor; creation fails with
 * FG_ERR_NOT_FACTOR or FG_ERR_SPECIAL_WORD (empty, ab, ba, aba). */
typedef struct fg_factor fg_factor;

FG_API fg_status fg_factor_create(const char* word, fg_factor** out);
FG_API void fg_factor_free(fg_factor* f);

FG_API const char* fg_factor_word(const fg_factor* f);
FG_API fg_status fg_factor_classification(const fg_factor* f, fg_classification* out);
FG_API int fg_factor_kernel_order(const fg_factor* f);
FG_API uint64_t fg_factor_kernel_start(const fg_factor* f);
FG_API const char* fg_factor_mu1(const fg_factor* f);
FG_API const char* fg_factor_mu2(const fg_factor* f);
/* which = 1 or 2 */
FG_API fg_status fg_factor_gap(const fg_factor* f, int which, const char** out);
/* Gap after the p-th occurrence, as 1 or 2. */
FG_API fg_status fg_factor_gap_index_at(const fg_factor* f, uint64_t p, int* out);
FG_API fg_status fg_factor_position(const fg_factor* f, uint64_t p, uint64_t* out);
/* present = 0 for T1.1 and for lengths that are not f_k with k >= 2 */
FG_API fg_status fg_factor_conjugate_index(const fg_factor* f, int* present, int64_t* out);

/* ---- spectra ---------------------------------------------------------- */

/* prop: "P1", "P2", "P3", "S1", "S2", "S3", "Sinf", "O1", "O2", "Oinf", ... */
FG_API fg_status fg_in_spectrum(const char* word, uint64_t p, const char* prop, int* out);
/* Bit t is set when type t (fg_factor_type) belongs to the local spectrum. */
FG_API fg_status fg_local_spectrum(const char* prop, unsigned* type_mask);
FG_API fg_status fg_square_factor_check(const char* word, int* out);

/* ---- factor sets ------------------------------------------------------ */

typedef struct fg_word_list fg_word_list;

FG_API fg_status fg_enumerate_factors(uint64_t n, fg_word_list** out);
FG_API size_t fg_word_list_size(const fg_word_list* list);
FG_API const char* fg_word_list_at(const fg_word_list* list, size_t index);
FG_API void fg_word_list_free(fg_word_list* list);

/* counts[t] for t = FG_T1_1..FG_T2_3; n >= 3 */
FG_API fg_status fg_type_census(uint64_t n, uint64_t counts[6]);

/* ---- brute-force oracle ----------------------------------------------- */

typedef struct fg_occurrences fg_occurrences;

/* prefix_len = 0 sizes the prefix automatically to hold min_count
 * occurrences; otherwise exactly fib_prefix(prefix_len) is searched. */
FG_API fg_status fg_find_occurrences(const char* word, uint64_t prefix_len, uint64_t min_count,
                                     fg_occurrences** out);
FG_API size_t fg_occurrences_size(const fg_occurrences* occ);
FG_API uint64_t fg_occurrences_position(const fg_occurrences* occ, size_t index);
FG_API uint64_t fg_occurrences_prefix_len(const fg_occurrences* occ);
/* Observed gap between occurrences index and index + 1 (0-based). */
FG_API const char* fg_occurrences_gap(const fg_occurrences* occ, size_t index);
FG_API void fg_occurrences_free(fg_occurrences* occ);

/* Oracle-backed gaps of ab, ba or aba. */
FG_API fg_status fg_special_word_gaps(const char* word, fg_string** nu1, fg_string** nu2);

typedef struct fg_report fg_report;

FG_API fg_status fg_verify_range(uint64_t max_len, uint64_t p_max, fg_report** out);
FG_API uint64_t fg_report_mismatches(const fg_report* r);
FG_API uint64_t fg_report_factors(const fg_report* r);
FG_API const char* fg_report_text(const fg_report* r);
FG_API const char* fg_report_json_lines(const fg_report* r);
FG_API void fg_report_free(fg_report* r);

#ifdef __cplusplus
}
#endif

#endif /* FIBGAP_FIBGAP_H */
