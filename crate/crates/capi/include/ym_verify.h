/* C interface for the ym-verify toolkit.
 *
 * Return codes:
 *   0  success
 *   1  check failed (validation or internal oracle/quadrature gate)
 *  -1  null or invalid argument
 *  -2  invalid configuration
 *  -3  internal error
 *
 * Strings written through out-parameters are NUL-terminated, owned by
 * the caller, and must be released with ymv_string_free. Out-parameters
 * are written only when the return code is >= 0.
 */

#ifndef YM_VERIFY_H
#define YM_VERIFY_H

#ifdef __cplusplus
extern "C" {
#endif

#define YMV_OK 0
#define YMV_CHECK_FAILED 1
#define YMV_NULL_ARG (-1)
#define YMV_INVALID_CONFIG (-2)
#define YMV_INTERNAL (-3)

/* Opaque run configuration. */
typedef struct YmvConfig YmvConfig;

/* Toolkit version as a static string; do not free. */
const char *ymv_version(void);

/* New configuration with default settings (paper-single preset, beta 1).
 * Release with ymv_config_free. */
YmvConfig *ymv_config_new(void);

/* Parse a TOML run configuration (same schema as the CLI config file).
 * On success writes a new handle to `out` and returns 0. */
int ymv_config_from_toml(const char *text, YmvConfig **out);

/* Release a configuration handle. Null is a no-op. */
void ymv_config_free(YmvConfig *cfg);

/* Check the parameter conditions of the configured field.
 * Returns 0 when all conditions hold at 1e-10, 1 when violated. */
int ymv_validate(const YmvConfig *cfg);

/* Run the claim audit and write the JSON report to `out_json`.
 * Returns 0 on success, 1 when the internal gate failed (the report is
 * still written). */
int ymv_run_claims(const YmvConfig *cfg, char **out_json);

/* Sweep the configured beta values (at least 3) and write a CSV with
 * columns beta,norm,energy,ratio plus a fitted-exponent trailer row. */
int ymv_sweep_csv(const YmvConfig *cfg, char **out_csv);

/* Release a string returned by this library. Null is a no-op. */
void ymv_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* YM_VERIFY_H */
