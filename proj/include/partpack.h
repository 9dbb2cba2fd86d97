/* C surface of the set-partition pattern packing library.
 *
 * Every object is an opaque handle created and destroyed here; every
 * fallible call returns a pp_status and reports details through
 * pp_last_error(), which is per thread and valid until the next failing
 * call on that thread. Strings handed out through char** are owned by the
 * caller and released with pp_string_free(); const char* returns point at
 * storage owned by the handle they came from.
 */
#ifndef PARTPACK_H
#define PARTPACK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PARTPACK_API __declspec(dllexport)
#else
#define PARTPACK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
    PP_OK = 0,
    PP_ERR_INVALID = 1,  /* argument or precondition violation */
    PP_ERR_PARSE = 2,    /* malformed word text; position in the message */
    PP_ERR_CAP = 3,      /* refused: candidate space above the safety cap */
    PP_ERR_NOMEM = 4,
    PP_ERR_INTERNAL = 5
} pp_status;

/* Restricted: a subsequence order-isomorphic to the pattern.
 * Unrestricted: a subsequence whose canonization equals the pattern. */
typedef enum pp_mode {
    PP_MODE_RESTRICTED = 0,
    PP_MODE_UNRESTRICTED = 1
} pp_mode;

/* Search families for pp_maximize. PARTITIONS is the full space of
 * canonical words; WORDS is {1..k}^n (restricted counting only); LAYERED
 * and TWO_BLOCK are the structure-guided families. */
typedef enum pp_space {
    PP_SPACE_PARTITIONS = 0,
    PP_SPACE_WORDS = 1,
    PP_SPACE_LAYERED = 2,
    PP_SPACE_TWO_BLOCK = 3
} pp_space;

typedef enum pp_format {
    PP_FORMAT_TEXT = 0,
    PP_FORMAT_JSON = 1,
    PP_FORMAT_CSV = 2
} pp_format;

typedef struct pp_word pp_word;         /* a word over {1,2,...} */
typedef struct pp_patterns pp_patterns; /* pattern set plus counting mode */
typedef struct pp_result pp_result;     /* one maximize outcome */
typedef struct pp_table pp_table;       /* density table over a range of n */
typedef struct pp_report pp_report;     /* claims-verifier report */
typedef struct pp_stream pp_stream;     /* canonical-word enumerator */

PARTPACK_API const char* pp_version(void);
PARTPACK_API const char* pp_last_error(void);
PARTPACK_API void pp_string_free(char* text);
PARTPACK_API void pp_indices_free(int32_t* indices);

/* Words. Text form: digit string while every letter is at most 9,
 * comma-separated integers otherwise ("1,2,1,10"). */
PARTPACK_API pp_status pp_word_parse(const char* text, pp_word** out);
PARTPACK_API pp_status pp_word_from_letters(const int32_t* letters, size_t count,
                                            pp_word** out);
PARTPACK_API void pp_word_free(pp_word* w);
PARTPACK_API size_t pp_word_length(const pp_word* w);
PARTPACK_API int32_t pp_word_max_letter(const pp_word* w);
PARTPACK_API int pp_word_is_canonical(const pp_word* w);
PARTPACK_API pp_status pp_word_format(const pp_word* w, char** out);
PARTPACK_API pp_status pp_word_letters(const pp_word* w, int32_t* buffer,
                                       size_t capacity, size_t* written);
PARTPACK_API pp_status pp_word_canonize(const pp_word* w, pp_word** out);
PARTPACK_API pp_status pp_word_alternating(int32_t n, pp_word** out);

/* Pattern sets: distinct canonical patterns of one shared length, counted
 * in one mode. Length and duplicate violations surface at add time. */
PARTPACK_API pp_status pp_patterns_create(pp_mode mode, pp_patterns** out);
PARTPACK_API pp_status pp_patterns_add(pp_patterns* set, const char* pattern);
PARTPACK_API pp_status pp_patterns_key(const pp_patterns* set, char** out);
PARTPACK_API void pp_patterns_free(pp_patterns* set);

/* Exact occurrence count. Unrestricted counting requires a canonical
 * target. */
PARTPACK_API pp_status pp_count(const pp_patterns* set, const pp_word* target,
                                int64_t* out);

/* All matching 1-based index tuples, lexicographic, flattened row-major:
 * tuple t occupies indices[t*tuple_length .. t*tuple_length+tuple_length-1].
 * The buffer is released with pp_indices_free; it is NULL when the count
 * is zero. */
PARTPACK_API pp_status pp_occurrences(const pp_patterns* set, const pp_word* target,
                                      int32_t** indices, size_t* tuple_count,
                                      size_t* tuple_length);

typedef struct pp_search_options {
    int64_t candidate_cap; /* exhaustive-scan ceiling */
    int unsafe_large;      /* nonzero lifts the ceiling */
    int threads;           /* deterministic for every value */
    size_t witness_limit;  /* argmax words kept on the result */
} pp_search_options;

PARTPACK_API void pp_search_options_init(pp_search_options* opts);

/* Maximum match count over the chosen family. k is the block budget (at
 * most k blocks; ignored by TWO_BLOCK). TWO_BLOCK applies to the single
 * unrestricted pattern 121 only. */
PARTPACK_API pp_status pp_maximize(const pp_patterns* set, int32_t n, int32_t k,
                                   pp_space space, const pp_search_options* opts,
                                   pp_result** out);
PARTPACK_API int64_t pp_result_mu(const pp_result* r);
PARTPACK_API pp_status pp_result_density(const pp_result* r, int64_t* numerator,
                                         int64_t* denominator);
PARTPACK_API int64_t pp_result_examined(const pp_result* r);
PARTPACK_API int64_t pp_result_witness_total(const pp_result* r);
PARTPACK_API size_t pp_result_witness_count(const pp_result* r);
PARTPACK_API pp_status pp_result_witness(const pp_result* r, size_t index, char** out);
PARTPACK_API const char* pp_result_space(const pp_result* r);
/* 1 when a structure-guided search re-verified exhaustively and agreed,
 * 0 when it disagreed, -1 when no cross-check ran. */
PARTPACK_API int pp_result_exhaustive_agreement(const pp_result* r);
PARTPACK_API void pp_result_free(pp_result* r);

/* Density table for n from the pattern length to n_max; fixed_k = 0 means
 * k = n row by row. Truncation by the cap leaves a note, not an error. */
PARTPACK_API pp_status pp_density_table(const pp_patterns* set, int32_t n_max,
                                        int32_t fixed_k, const pp_search_options* opts,
                                        pp_table** out);
PARTPACK_API size_t pp_table_rows(const pp_table* t);
PARTPACK_API const char* pp_table_truncation_note(const pp_table* t);
PARTPACK_API pp_status pp_table_render(const pp_table* t, pp_format format, char** out);
PARTPACK_API void pp_table_free(pp_table* t);

/* Claims verifier: every claim the library checks, on grids clipped to the
 * caps. include_runtime = 0 renders without the per-claim runtime field,
 * which is the only field that varies between identical runs. */
PARTPACK_API pp_status pp_verify(int32_t n_cap, int32_t k_cap, int threads,
                                 pp_report** out);
PARTPACK_API size_t pp_report_count(const pp_report* rep);
PARTPACK_API const char* pp_report_claim_id(const pp_report* rep, size_t index);
PARTPACK_API const char* pp_report_claim_status(const pp_report* rep, size_t index);
PARTPACK_API pp_status pp_report_render(const pp_report* rep, pp_format format,
                                        int include_runtime, char** out);
/* 0 when no claim deviates, 1 otherwise. */
PARTPACK_API int pp_report_exit_code(const pp_report* rep);
PARTPACK_API void pp_report_free(pp_report* rep);

/* Lexicographic stream of canonical words of length n with at most k_max
 * blocks. pp_enum_next returns 1 and fills *out while words remain, 0 at
 * exhaustion, -1 on error. */
PARTPACK_API pp_status pp_enum_open(int32_t n, int32_t k_max, pp_stream** out);
PARTPACK_API int pp_enum_next(pp_stream* s, pp_word** out);
PARTPACK_API void pp_enum_close(pp_stream* s);

/* |Pi_{n,k}| exactly; n is capped where the count leaves int64. */
PARTPACK_API pp_status pp_space_size(int32_t n, int32_t k_max, int64_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PARTPACK_H */
