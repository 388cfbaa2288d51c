/* C interface to the csg solver library.
 *
 * All functions returning csg_status report failure through the code and
 * leave a human-readable message retrievable with csg_last_error() (thread
 * local, valid until the next failing call on the same thread). Handles are
 * opaque; every *_create / csg_solve / csg_reproduce result must be released
 * with the matching *_destroy, and strings returned through char** with
 * csg_string_free.
 */
#ifndef CSG_H
#define CSG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CSG_API __declspec(dllexport)
#else
#define CSG_API __attribute__((visibility("default")))
#endif

typedef enum csg_status {
  CSG_OK = 0,
  CSG_ERROR_USAGE = 1,   /* bad names, malformed values, dimension mismatch */
  CSG_ERROR_NUMERIC = 2, /* run aborted on non-finite values */
  CSG_ERROR_IO = 3,      /* file could not be read or written */
  CSG_ERROR_INTERNAL = 4,
  CSG_NOT_REACHED = 5,   /* query on a target the run did not attain */
} csg_status;

typedef struct csg_config csg_config; /* experiment description */
typedef struct csg_run csg_run;       /* completed solver run */
typedef struct csg_table csg_table;   /* benchmark reproduction */

CSG_API const char* csg_version(void);
CSG_API const char* csg_last_error(void);

/* -- configuration ------------------------------------------------------- */

CSG_API csg_config* csg_config_create(void);
CSG_API void csg_config_destroy(csg_config* config);

/* Keys: problem, method, eps (comma separated ladder), x0 (comma separated
 * coordinates), max_evals, trace (output path), trace_cap, and param.<name>
 * for method parameters (e.g. param.theta, param.beta_prime). */
CSG_API csg_status csg_config_set(csg_config* config, const char* key, const char* value);

/* Loads a flat key = value file with # comments; same keys as csg_config_set.
 * Values already set are overwritten by the file. */
CSG_API csg_status csg_config_load_file(csg_config* config, const char* path);

/* -- solving ------------------------------------------------------------- */

CSG_API csg_status csg_solve(const csg_config* config, csg_run** run_out);
CSG_API void csg_run_destroy(csg_run* run);

CSG_API int csg_run_dimension(const csg_run* run);
CSG_API double csg_run_best_value(const csg_run* run);
CSG_API csg_status csg_run_best_point(const csg_run* run, double* buffer, int length);
CSG_API long long csg_run_total_evals(const csg_run* run);
CSG_API const char* csg_run_termination(const csg_run* run);

/* Accuracy-ladder results: entry i pairs the i-th eps with the first eval
 * count that attained it. Returns CSG_NOT_REACHED (with eps still written)
 * when the run missed that target. */
CSG_API int csg_run_target_count(const csg_run* run);
CSG_API csg_status csg_run_target(const csg_run* run, int index, double* eps_out,
                                  long long* evals_out);

CSG_API csg_status csg_run_write_trace(const csg_run* run, const char* path);

/* Renders the run's ladder as a table; format is "csv" or "markdown". */
CSG_API csg_status csg_run_render(const csg_run* run, const char* format, char** text_out);

/* -- benchmark reproduction ---------------------------------------------- */

/* which is "table1" or "table2". */
CSG_API csg_status csg_reproduce(const char* which, csg_table** table_out);
CSG_API void csg_table_destroy(csg_table* table);
CSG_API csg_status csg_table_render(const csg_table* table, const char* format, char** text_out);

/* -- catalog -------------------------------------------------------------- */

/* what is "problems" or "methods"; yields one "name\tdescription" per line. */
CSG_API csg_status csg_list(const char* what, char** text_out);

CSG_API void csg_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CSG_H */
