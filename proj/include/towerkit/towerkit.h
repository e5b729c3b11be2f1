/*
 * towerkit C API: exact tower combinatorics, density-extension runs,
 * certificate checking, and the property-suite batteries, behind opaque
 * handles and status codes. All inputs and outputs are UTF-8 JSON or plain
 * text; every numeric value is an exact decimal string.
 */
#ifndef TOWERKIT_TOWERKIT_H
#define TOWERKIT_TOWERKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twk_status {
  TWK_OK = 0,           /* success / all checks passed */
  TWK_CHECK_FAILED = 1, /* a verification failed */
  TWK_INVALID = 2,      /* malformed or rejected input */
  TWK_ERROR = 3         /* internal failure */
} twk_status;

const char* twk_status_name(twk_status s);
const char* twk_version(void);

/* ---- scenario runs ---------------------------------------------------- */

/* A finished run: final conditions, certificates, and check verdicts. */
typedef struct twk_run twk_run;

/* Execute a scenario (JSON text). On TWK_OK, *out owns the result and must
 * be released with twk_run_free. Diagnostics land in errbuf (if given). */
twk_status twk_run_scenario(const char* scenario_json, twk_run** out, char* errbuf,
                            size_t errcap);

/* 1 when every check of the run passed. */
int twk_run_passed(const twk_run* run);

/* Report JSON with the given timing field; the string is owned by the run
 * handle and stays valid until the next call or twk_run_free. */
const char* twk_run_report(twk_run* run, uint64_t timing_ms);

void twk_run_free(twk_run* run);

/* Re-verify a serialized report from its own data alone. Returns TWK_OK,
 * TWK_CHECK_FAILED with the reason in errbuf, or TWK_INVALID. */
twk_status twk_check_report(const char* report_json, char* errbuf, size_t errcap);

/* ---- bundled demos ----------------------------------------------------- */

/* Scenario text of a bundled demo; free *json_out with twk_string_free. */
twk_status twk_demo_scenario(const char* name, char** json_out, char* errbuf, size_t errcap);

/* Newline-separated demo names; free with twk_string_free. */
twk_status twk_demo_names(char** names_out);

/* ---- property suites --------------------------------------------------- */

/* Run a named battery; trials = 0 picks the battery default. *summary_out
 * receives a JSON object (selector, trials, pass, detail, counterexample,
 * timing); free with twk_string_free. TWK_CHECK_FAILED on a counterexample. */
twk_status twk_suite(const char* selector, uint64_t trials, uint64_t seed, char** summary_out,
                     char* errbuf, size_t errcap);

/* Newline-separated selector list; free with twk_string_free. */
twk_status twk_suite_selectors(char** names_out);

void twk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TOWERKIT_TOWERKIT_H */
