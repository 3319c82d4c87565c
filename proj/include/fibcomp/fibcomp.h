#ifndef FIBCOMP_FIBCOMP_H
#define FIBCOMP_FIBCOMP_H

/* C interface to the fibcomp library. Every fallible call returns an
 * fc_status; on failure fc_last_error() holds a message for the calling
 * thread. Strings returned through `char** out` are owned by the caller and
 * released with fc_string_free. Handles are released with their _free
 * function; passing NULL to any _free function is a no-op. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FIBCOMP_BUILDING_LIBRARY)
#    define FIBCOMP_API __declspec(dllexport)
#  else
#    define FIBCOMP_API __declspec(dllimport)
#  endif
#else
#  define FIBCOMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_INVALID_ARGUMENT = 1,
  FC_PARSE_ERROR = 2,
  FC_DOMAIN_ERROR = 3,
  FC_UNKNOWN_NAME = 4,
  FC_NOT_MEMBER = 5,
  FC_NOT_FREE = 6,
  FC_INTERNAL = 7
} fc_status;

typedef enum fc_format { FC_FORMAT_TEXT = 0, FC_FORMAT_STRUCTURED = 1 } fc_format;

typedef struct fc_series fc_series;
typedef struct fc_spec fc_spec;
typedef struct fc_report fc_report;

FIBCOMP_API const char* fc_version(void);
FIBCOMP_API const char* fc_status_name(fc_status status);
FIBCOMP_API const char* fc_last_error(void);
FIBCOMP_API void fc_string_free(char* s);

/* Series. Polynomials and series use comma-separated coefficients, lowest
 * degree first ("0,1,1" is x + x^2). */
FIBCOMP_API fc_status fc_series_parse(const char* coefficients, fc_series** out);
FIBCOMP_API fc_status fc_series_from_rational(const char* numerator, const char* denominator, size_t order,
                                              fc_series** out);
FIBCOMP_API fc_status fc_series_fib_multisection(size_t modulus, size_t residue, size_t order, fc_series** out);
FIBCOMP_API size_t fc_series_order(const fc_series* s);
FIBCOMP_API fc_status fc_series_coefficient(const fc_series* s, size_t n, char** out);
FIBCOMP_API fc_status fc_series_to_string(const fc_series* s, char** out);
FIBCOMP_API fc_status fc_series_add(const fc_series* a, const fc_series* b, fc_series** out);
FIBCOMP_API fc_status fc_series_sub(const fc_series* a, const fc_series* b, fc_series** out);
FIBCOMP_API fc_status fc_series_mul(const fc_series* a, const fc_series* b, fc_series** out);
FIBCOMP_API fc_status fc_series_geometric_inverse(const fc_series* f, fc_series** out);
FIBCOMP_API fc_status fc_series_multisect(const fc_series* f, size_t modulus, size_t residue, fc_series** out);
FIBCOMP_API int fc_series_equal(const fc_series* a, const fc_series* b);
FIBCOMP_API void fc_series_free(fc_series* s);

/* Rendered expansion of numerator/denominator through x^order. */
FIBCOMP_API fc_status fc_expand(const char* numerator, const char* denominator, size_t order, fc_format format,
                                char** out);

/* Compositions and weighted sums. `weight` is a weighting such as "floor(2)". */
FIBCOMP_API fc_status fc_weighted_sum(const char* weight, uint64_t n, char** out);
FIBCOMP_API fc_status fc_count_compositions(uint64_t n, const char* parts, char** out);

/* Monoids. Specs use the form "parts=1,2; prefix=(1); suffix=(2); mod=2;
 * forbid=(2,1)"; words the form "(1,2,1)". */
FIBCOMP_API fc_status fc_spec_parse(const char* text, fc_spec** out);
FIBCOMP_API fc_status fc_spec_to_string(const fc_spec* spec, char** out);
FIBCOMP_API fc_status fc_spec_contains(const fc_spec* spec, const char* word, int* out);
FIBCOMP_API void fc_spec_free(fc_spec* spec);

FIBCOMP_API fc_status fc_overlaps(const char* u, const char* v, int* out);
FIBCOMP_API fc_status fc_count_factorizations(const fc_spec* spec, const char* word, char** out);
FIBCOMP_API fc_status fc_primes(const fc_spec* spec, uint64_t max_weight, int with_words, fc_format format,
                                char** out);
FIBCOMP_API fc_status fc_members(const fc_spec* spec, uint64_t max_weight, fc_format format, char** out);
/* Fails with FC_NOT_FREE when the word does not factor uniquely. */
FIBCOMP_API fc_status fc_factor(const fc_spec* spec, const char* word, fc_format format, char** out);
FIBCOMP_API fc_status fc_free_check(const fc_spec* spec, uint64_t max_weight, fc_format format, int* is_free,
                                    char** out);

/* Identities. `params` is "k=2,m=3" or NULL. */
FIBCOMP_API fc_status fc_verify(const char* id, const char* params, size_t order, fc_report** out);
FIBCOMP_API int fc_report_passed(const fc_report* report);
FIBCOMP_API fc_status fc_report_render(const fc_report* report, fc_format format, char** out);
FIBCOMP_API void fc_report_free(fc_report* report);
FIBCOMP_API fc_status fc_verify_all(size_t order, fc_format format, int* all_passed, char** out);
FIBCOMP_API fc_status fc_identity_ids(fc_format format, char** out);

FIBCOMP_API fc_status fc_bijection(const char* name, const char* input, const char* params, int inverse,
                                   fc_format format, char** out);
FIBCOMP_API fc_status fc_dyck(uint64_t n, uint64_t h, fc_format format, char** out);
/* `first` < 0 selects the sequence's natural offset; `weight` may be NULL. */
FIBCOMP_API fc_status fc_bfile(const char* name, const char* params, const char* weight, int64_t first,
                               int64_t last, char** out);

#ifdef __cplusplus
}
#endif

#endif
