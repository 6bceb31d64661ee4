#ifndef WILMVALENCE_H
#define WILMVALENCE_H

/* C API for the wilmvalence library: construction, counting and
 * certification of zeros of harmonic polynomials of the form
 *   h(z) = eps z^n + q(z) + conj(q(z)).
 *
 * All functions return a wv_status code; additional detail for the last
 * failure on the calling thread is available via wv_last_error().
 * Objects are opaque handles freed with their wv_*_free function.
 * Dyadic rationals cross the boundary as strings "mantissa*2^exponent"
 * (also accepted: "2^-40", plain integers, "1/4"). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wv_status {
    WV_OK = 0,     /* success / achieved / verified */
    WV_FAIL = 1,   /* domain failure: target not achieved, verification false */
    WV_EINVAL = 2, /* parameter, usage or schema error */
    WV_ERROR = 3   /* internal error */
} wv_status;

typedef struct wv_instance wv_instance;
typedef struct wv_certificate wv_certificate;

const char* wv_version(void);

/* Message for the most recent failing call on this thread. */
const char* wv_last_error(void);

void wv_string_free(char* s);

/* --- Edelman-Kostlan expectation oracle ------------------------------- */

/* (sqrt(m)/pi)(arctan b - arctan a); a may be -INFINITY, b +INFINITY. */
wv_status wv_ek_expected(unsigned m, double a, double b, double* out);

/* --- instances and certificates --------------------------------------- */

/* JSON {"n", "m", "epsilon", "q": [[re, im], ...]}. */
wv_status wv_instance_from_json(const char* json, wv_instance** out);
void wv_instance_free(wv_instance* inst);

/* Certified lower-bound zero count over all n lines. */
wv_status wv_certify(const wv_instance* inst, unsigned max_precision_bits,
                     wv_certificate** out);
void wv_certificate_free(wv_certificate* cert);

unsigned wv_certificate_total(const wv_certificate* cert);

/* Caller frees with wv_string_free. */
wv_status wv_certificate_to_json(const wv_certificate* cert, char** out);

/* WV_OK valid, WV_FAIL invalid, WV_EINVAL malformed. */
wv_status wv_verify_json(const char* cert_json);

/* --- batch runs (outputs embed version, config and seed) --------------- */

/* Monte Carlo expectation experiment; writes a CSV row to csv_path and a
 * bounds comparison to bounds_json_path / bounds_text_path (each
 * optional: pass NULL to skip). */
wv_status wv_expect(unsigned n, unsigned m, const char* epsilon,
                    unsigned trials, uint64_t seed, unsigned precision_bits,
                    unsigned threads, const char* csv_path,
                    const char* bounds_json_path,
                    const char* bounds_text_path);

/* Random-restart witness search toward ceil(n sqrt(m)) certified zeros.
 * Writes the full report (with embedded certificate) to report_path when
 * non-NULL.  Returns WV_OK iff achieved. */
wv_status wv_search(unsigned n, unsigned m, unsigned budget_trials,
                    uint64_t seed, unsigned precision_bits,
                    unsigned refine_steps, const char* report_path);

#ifdef __cplusplus
}
#endif

#endif
