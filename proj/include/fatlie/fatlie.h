#ifndef FATLIE_H
#define FATLIE_H

/* C interface to the fatlie library. Every fallible call returns an
 * fl_status; on failure fl_last_error() describes the problem for the
 * calling thread. Strings returned by *_format functions are owned by the
 * handle and stay valid until the next *_format call on it or its release. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FL_API __declspec(dllexport)
#else
#define FL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fl_status {
  FL_OK = 0,
  FL_INVALID_ARGUMENT,
  FL_IO,
  FL_PARSE,
  FL_NOT_ZERO_DIMENSIONAL,
  FL_NON_MINIMAL_PRESENTATION,
  FL_CONSTANT_UNIT_IDEAL,
  FL_DIMENSION_BOUND,
  FL_ORACLE_MISMATCH,
  FL_INTERNAL
} fl_status;

typedef enum fl_format { FL_FORMAT_JSON = 0, FL_FORMAT_TABLE = 1 } fl_format;

typedef struct fl_instances fl_instances;
typedef struct fl_fatpoint fl_fatpoint;
typedef struct fl_report fl_report;
typedef struct fl_corpus_result fl_corpus_result;

FL_API const char* fl_status_name(fl_status status);
FL_API const char* fl_last_error(void);
/* 0-based offset into the offending polynomial for FL_PARSE, otherwise -1. */
FL_API long fl_last_error_position(void);

/* Instance lists: a file or JSON text holding one instance or a corpus, or a
 * built-in corpus (ade, monomial-ci, powers, order3, random, all). */
FL_API fl_status fl_instances_load(const char* path, fl_instances** out);
FL_API fl_status fl_instances_parse(const char* json_text, fl_instances** out);
FL_API fl_status fl_instances_builtin(const char* name, uint64_t seed, size_t random_count, fl_instances** out);
FL_API size_t fl_instances_count(const fl_instances* list);
FL_API const char* fl_instances_label(const fl_instances* list, size_t index);
/* Overrides the degree cap of every instance (cap >= 2). */
FL_API fl_status fl_instances_set_cap(fl_instances* list, unsigned cap);
FL_API void fl_instances_free(fl_instances* list);

/* Parses, minimalizes and builds instance `index`. */
FL_API fl_status fl_fatpoint_build(const fl_instances* list, size_t index, fl_fatpoint** out);
/* Builds from generators as given, without minimalizing. */
FL_API fl_status fl_fatpoint_from_generators(const char* const* generators, size_t ngenerators,
                                             const char* const* vars, size_t nvars, unsigned cap,
                                             fl_fatpoint** out);
FL_API size_t fl_fatpoint_dim(const fl_fatpoint* fp);
FL_API unsigned fl_fatpoint_trunc_level(const fl_fatpoint* fp);
FL_API size_t fl_fatpoint_edim(const fl_fatpoint* fp);
/* -1 when S is the ground field. */
FL_API int fl_fatpoint_ord(const fl_fatpoint* fp);
FL_API size_t fl_fatpoint_eps1(const fl_fatpoint* fp);
FL_API int fl_fatpoint_is_trivial(const fl_fatpoint* fp);
FL_API size_t fl_fatpoint_der_dim(const fl_fatpoint* fp);
FL_API const char* fl_fatpoint_format(fl_fatpoint* fp, fl_format format);
FL_API void fl_fatpoint_free(fl_fatpoint* fp);

/* oracle_bound: compare against the brute-force solver when dim S <= bound
 * (0 disables). */
FL_API fl_status fl_check(const fl_fatpoint* fp, size_t oracle_bound, fl_report** out);
FL_API fl_status fl_check_instance(const fl_instances* list, size_t index, size_t oracle_bound, fl_report** out);
FL_API int fl_report_criterion_applies(const fl_report* r);
FL_API int fl_report_solvable(const fl_report* r);
FL_API int fl_report_nilpotent(const fl_report* r);
FL_API int fl_report_consistent(const fl_report* r);
FL_API size_t fl_report_der_dim(const fl_report* r);
FL_API const char* fl_report_format(fl_report* r, fl_format format, int timings);
FL_API void fl_report_free(fl_report* r);

typedef struct fl_corpus_options {
  uint64_t seed;
  unsigned jobs;
  unsigned cap; /* 0 keeps each instance's cap */
  size_t oracle_bound;
} fl_corpus_options;

FL_API fl_corpus_options fl_corpus_default_options(void);

typedef struct fl_corpus_counts {
  size_t total;
  size_t applies_solvable;
  size_t applies_unsolvable;
  size_t not_applies_solvable;
  size_t not_applies_unsolvable;
  size_t trivial;
  size_t errors;
  size_t oracle_mismatches;
} fl_corpus_counts;

FL_API fl_status fl_corpus_run(const fl_instances* list, const fl_corpus_options* options, fl_corpus_result** out);
FL_API fl_corpus_counts fl_corpus_result_counts(const fl_corpus_result* res);
FL_API const char* fl_corpus_result_format(fl_corpus_result* res, fl_format format, int timings);
FL_API void fl_corpus_result_free(fl_corpus_result* res);

#ifdef __cplusplus
}
#endif

#endif
