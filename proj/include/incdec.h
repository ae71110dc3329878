/* C interface to the incremental-decremental maximization library.
 *
 * Instances are opaque handles; every other exchange is a JSON (or CSV)
 * string owned by the library and released with incdec_string_free. Calls
 * return INCDEC_OK or an error code; incdec_last_error() describes the most
 * recent failure on the calling thread.
 *
 * Options are a JSON object (NULL or "" for defaults):
 *   {
 *     "prec": "le" | "lt",                     // tie side, default "le"
 *     "tie": "min-index" | "max-index" | "priority:<label,...>",
 *     "normalize": bool,                       // default true
 *     "analyzer_cap": int,                     // 3^n analyzers, default 12
 *     "pair_cap": int,                         // 4^n analyzer, default 10
 *     "profile_cap": int,                      // optimum profile, default 20
 *     "order_cap": int,                        // n! search, default 9
 *     "seed": int,                             // verify sweeps, default 1
 *     "only": "<check name>"                   // verify, default all
 *   }
 */

#ifndef INCDEC_H
#define INCDEC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum incdec_status {
  INCDEC_OK = 0,
  INCDEC_ERROR_INVALID = 1,      /* bad argument or mismatched input */
  INCDEC_ERROR_PARSE = 2,        /* malformed JSON */
  INCDEC_ERROR_CAPACITY = 3,     /* enumeration cap exceeded */
  INCDEC_ERROR_PRECONDITION = 4, /* documented precondition violated */
  INCDEC_ERROR_IO = 5,           /* file system failure */
  INCDEC_ERROR_INTERNAL = 6
} incdec_status;

typedef struct incdec_instance incdec_instance;

const char* incdec_status_name(incdec_status status);

/* Message for the last failing call on this thread; empty string if none. */
const char* incdec_last_error(void);

void incdec_string_free(char* text);
void incdec_instance_free(incdec_instance* instance);

/* Instance construction: from JSON text, from a file, or from the named
 * catalog (params_json is an object of rationals, e.g. {"k": 3}). */
incdec_status incdec_instance_parse(const char* json_text, incdec_instance** out);
incdec_status incdec_instance_read(const char* path, incdec_instance** out);
incdec_status incdec_instance_build(const char* id, const char* params_json,
                                    incdec_instance** out);

int incdec_instance_size(const incdec_instance* instance);
int incdec_instance_is_incremental(const incdec_instance* instance);
incdec_status incdec_instance_to_json(const incdec_instance* instance, char** out_json);

/* Property analysis of every function in the instance:
 * {"g": report, "h": report} or {"f": report}. */
incdec_status incdec_analyze(const incdec_instance* instance, const char* options_json,
                             char** out_json);

/* Double-greedy run (pair instances only):
 * {"ordering": [...], "trace": [...], "ratio_report": {...}}. */
incdec_status incdec_run(const incdec_instance* instance, const char* options_json,
                         char** out_json);

/* Ratio report for a caller-supplied ordering (JSON array of labels). */
incdec_status incdec_ratio(const incdec_instance* instance, const char* ordering_json,
                           const char* options_json, char** out_json);

/* Exhaustive search over all orderings:
 * {"ordering": [...], "ratio": "p/q" | "inf", "ratio_report": {...}}. */
incdec_status incdec_best_order(const incdec_instance* instance, const char* options_json,
                                char** out_json);

/* CSV rendering of a ratio report produced by run/ratio/best-order output
 * (pass the "ratio_report" object). */
incdec_status incdec_ratio_report_csv(const char* report_json, char** out_csv);

/* Built-in verification suite. out_json gets
 * {"all_passed": bool, "checks": [{"name", "passed", "detail": [...]}]};
 * all_passed lands in *out_all_passed when non-NULL. Timing per check is
 * reported via out_timings_json (name -> seconds) when non-NULL. */
incdec_status incdec_verify_paper(const char* options_json, char** out_json,
                                  char** out_timings_json, int* out_all_passed);

#ifdef __cplusplus
}
#endif

#endif /* INCDEC_H */
