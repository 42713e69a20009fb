#ifndef HEPTIC_H
#define HEPTIC_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum HepticFormat {
  HEPTIC_FORMAT_TEXT = 0,
  HEPTIC_FORMAT_JSON = 1,
} HepticFormat;

typedef enum HepticPipeline {
  HEPTIC_PIPELINE_P5 = 0,
  HEPTIC_PIPELINE_P4 = 1,
  HEPTIC_PIPELINE_P3 = 2,
  HEPTIC_PIPELINE_CURVE_CERT = 3,
  HEPTIC_PIPELINE_DELTA_AUDIT = 4,
  HEPTIC_PIPELINE_ALL = 5,
} HepticPipeline;

typedef enum HepticStatus {
  HEPTIC_STATUS_OK = 0,
  HEPTIC_STATUS_NULL_POINTER = 1,
  HEPTIC_STATUS_INVALID_ARGUMENT = 2,
  HEPTIC_STATUS_INPUT_ERROR = 3,
  HEPTIC_STATUS_COMPUTATION_ERROR = 4,
  HEPTIC_STATUS_PANIC = 5,
} HepticStatus;

/*
 Opaque monomial ideal.
 */
typedef struct HepticIdeal HepticIdeal;

/*
 Opaque verdict report.
 */
typedef struct HepticReport HepticReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *heptic_version(void);

/*
 Message of the last failed call on this thread, or null. Valid until the
 next call into the library from the same thread.
 */
const char *heptic_last_error(void);

/*
 Runs one pipeline with bundled inputs.

 # Safety
 `out` must be valid for a pointer write.
 */
enum HepticStatus heptic_run(enum HepticPipeline pipeline,
                             uint64_t seed,
                             uint32_t primes,
                             bool exact,
                             struct HepticReport **out);

/*
 Process exit code the CLI would use for this report.

 # Safety
 `report` must be a live handle and `out` valid for a write.
 */
enum HepticStatus heptic_report_exit_code(const struct HepticReport *report, int32_t *out);

/*
 Number of sections, and how many of them are warnings.

 # Safety
 `report` must be a live handle; `sections` and `warnings` valid for writes.
 */
enum HepticStatus heptic_report_counts(const struct HepticReport *report,
                                       size_t *sections,
                                       size_t *warnings);

/*
 Renders the report; release the string with [`heptic_string_free`].

 # Safety
 `report` must be a live handle and `out` valid for a pointer write.
 */
enum HepticStatus heptic_report_render(const struct HepticReport *report,
                                       enum HepticFormat format,
                                       char **out);

/*
 # Safety
 `report` must come from [`heptic_run`] and not be used afterwards.
 Null is ignored.
 */
void heptic_report_free(struct HepticReport *report);

/*
 # Safety
 `s` must come from this library and not be used afterwards. Null is ignored.
 */
void heptic_string_free(char *s);

/*
 Parses a comma-separated generator list such as `"x0^2, x0*x1^7"`.

 # Safety
 `text` must be a NUL-terminated string and `out` valid for a pointer write.
 */
enum HepticStatus heptic_ideal_parse(const char *text, uint32_t num_vars, struct HepticIdeal **out);

/*
 # Safety
 `ideal` must be a live handle and `out` valid for a write.
 */
enum HepticStatus heptic_ideal_generator_count(const struct HepticIdeal *ideal, size_t *out);

/*
 # Safety
 `ideal` must be a live handle and `out` valid for a write.
 */
enum HepticStatus heptic_ideal_is_borel_fixed(const struct HepticIdeal *ideal, bool *out);

/*
 Number of degree-`m` monomials inside the ideal (`quotient = false`) or
 outside it (`quotient = true`).

 # Safety
 `ideal` must be a live handle and `out` valid for a write.
 */
enum HepticStatus heptic_ideal_hilbert_count(const struct HepticIdeal *ideal,
                                             uint32_t m,
                                             bool quotient,
                                             uint64_t *out);

/*
 # Safety
 `ideal` must come from [`heptic_ideal_parse`] and not be used afterwards.
 Null is ignored.
 */
void heptic_ideal_free(struct HepticIdeal *ideal);

/*
 Castelnuovo genus bound for degree `d` in `P^n`.

 # Safety
 `out` must be valid for a write.
 */
enum HepticStatus heptic_castelnuovo_bound(uint32_t d, uint32_t n, uint32_t *out);

/*
 Gap count of the numerical semigroup generated by `len` exponents.

 # Safety
 `exponents` must point to `len` readable values and `out` be valid for a
 write.
 */
enum HepticStatus heptic_semigroup_delta(const uint32_t *exponents, size_t len, uint32_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HEPTIC_H */
