/*
 * C interface to the tourn library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a tourn_status; on
 * failure tourn_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are heap allocated and
 * must be released with tourn_string_free().
 */
#ifndef TOURN_TOURN_H
#define TOURN_TOURN_H

#include <stddef.h>
#include <stdint.h>

#if defined(TOURN_BUILDING_LIBRARY)
#define TOURN_API __attribute__((visibility("default")))
#else
#define TOURN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tourn_tournament tourn_tournament;
typedef struct tourn_family tourn_family;

typedef enum tourn_status {
  TOURN_OK = 0,
  TOURN_ERR_INPUT = 1,    /* malformed or out-of-range input */
  TOURN_ERR_GUARD = 2,    /* brute-force size guard exceeded */
  TOURN_ERR_ARGUMENT = 3, /* null handle or output pointer */
  TOURN_ERR_INTERNAL = 4
} tourn_status;

typedef enum tourn_kind {
  TOURN_KIND_PAIRING = 0,
  TOURN_KIND_PARTIAL_PAIRING = 1,
  TOURN_KIND_QUASI = 2,
  TOURN_KIND_PARTIAL_QUASI = 3
} tourn_kind;

typedef enum tourn_filter {
  TOURN_FILTER_ALL = 0,
  TOURN_FILTER_IRREDUCIBLE = 1,
  TOURN_FILTER_INDECOMPOSABLE = 2
} tourn_filter;

typedef enum tourn_family_class {
  TOURN_CLASS_PAIRING = 0,
  TOURN_CLASS_QUASI_PAIRING = 1,
  TOURN_CLASS_NEITHER = 2
} tourn_family_class;

typedef struct tourn_enum_options {
  int n;
  tourn_kind kind;
  tourn_filter filter;
  int include_empty;
  int max_n; /* <= 0 keeps the default guard */
  int jobs;  /* worker threads for census; <= 0 means 1 */
} tourn_enum_options;

/* Receives one JSON document per call; return nonzero to stop the stream. */
typedef int (*tourn_line_callback)(const char* line, void* user);

TOURN_API const char* tourn_version(void);
TOURN_API const char* tourn_last_error(void);
TOURN_API void tourn_string_free(char* s);
TOURN_API tourn_status tourn_kind_parse(const char* name, tourn_kind* out);

/* Tournaments */
TOURN_API tourn_status tourn_transitive(int n, tourn_tournament** out);
TOURN_API tourn_status tourn_tournament_parse(const char* text, tourn_tournament** out);
TOURN_API tourn_status tourn_tournament_format(const tourn_tournament* t, char** out);
TOURN_API tourn_status tourn_tournament_dot(const tourn_tournament* t, char** out);
TOURN_API int tourn_tournament_order(const tourn_tournament* t);
TOURN_API tourn_status tourn_tournament_arc(const tourn_tournament* t, int x, int y, int* out);
TOURN_API void tourn_tournament_free(tourn_tournament* t);

TOURN_API tourn_status tourn_dual(const tourn_tournament* t, tourn_tournament** out);
TOURN_API tourn_status tourn_reverse_pairs(const tourn_tournament* t, const tourn_family* pairs,
                                           tourn_tournament** out);
TOURN_API tourn_status tourn_is_module(const tourn_tournament* t, const int* vertices,
                                       size_t count, int* out);
TOURN_API tourn_status tourn_is_indecomposable(const tourn_tournament* t, int* out);
TOURN_API tourn_status tourn_is_isomorphic(const tourn_tournament* a, const tourn_tournament* b,
                                           int* out);

/* Parses "{a,b,...}" into `buffer` (capacity `capacity`); *count receives the
 * number of vertices even when it exceeds the capacity. */
TOURN_API tourn_status tourn_vertex_set_parse(const char* text, int* buffer, size_t capacity,
                                              size_t* count);

/* Pair families, text form "i-j,k-l". ambient < 0 means max vertex + 1. */
TOURN_API tourn_status tourn_family_parse(const char* text, int ambient, tourn_family** out);
TOURN_API tourn_status tourn_family_format(const tourn_family* f, char** out);
TOURN_API int tourn_family_ambient(const tourn_family* f);
TOURN_API void tourn_family_free(tourn_family* f);
TOURN_API tourn_status tourn_family_classify(const tourn_family* f, tourn_family_class* out);
TOURN_API tourn_status tourn_family_is_irreducible(const tourn_family* f, int* out);

/* Streams enumerate records (JSON lines without trailing newline). */
TOURN_API tourn_status tourn_enumerate(const tourn_enum_options* options,
                                       tourn_line_callback callback, void* user);
/* Streams census records for families whose Inv tournament is indecomposable. */
TOURN_API tourn_status tourn_census(const tourn_enum_options* options,
                                    tourn_line_callback callback, void* user);
TOURN_API tourn_status tourn_count_irreducible_pairings(int m, uint64_t* out);

/* theorem is 1, 2 or 3. The report is a JSON document; *violations receives
 * the number of violating instances. */
TOURN_API tourn_status tourn_verify(int theorem, int n_min, int n_max, int jobs, int max_n,
                                    char** report_json, size_t* violations);
TOURN_API tourn_status tourn_verify_corollaries(int n_min, int n_max, int jobs, int max_n,
                                                char** report_json, size_t* violations);

#ifdef __cplusplus
}
#endif

#endif /* TOURN_TOURN_H */
