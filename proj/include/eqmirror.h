#ifndef EQMIRROR_H
#define EQMIRROR_H

#ifdef __cplusplus
extern "C" {
#endif

/* Exact-arithmetic engine for equivariant mirror symmetry on local P^2 and
 * local curves: I-functions from toric data, Picard-Fuchs checks, Birkhoff
 * factorization, mirror maps and potentials, closed-form generating
 * functions, fixed-point localization with cyclotomic weights.
 *
 * All work goes through eqm_run: one JSON request in, one JSON response out.
 * The request carries a "cmd" field (ifunc, pf-check, birkhoff, jfunc,
 * potential, closed-form, compare, localize, euler-equiv, verify-all) plus
 * command-specific fields; the response always contains the echoed inputs,
 * a machine-readable payload, and a pre-rendered "text" field. */

typedef struct eqm_session eqm_session;

enum {
    EQM_OK = 0,       /* success */
    EQM_MISMATCH = 1, /* a requested comparison or verification failed */
    EQM_USAGE = 2,    /* malformed request, spec or arguments */
    EQM_DOMAIN = 3,   /* exact-arithmetic domain error (pole, degeneracy) */
    EQM_BADHANDLE = 4
};

eqm_session* eqm_session_new(void);
void eqm_session_free(eqm_session* s);

/* Run one job.  On return *response_json points to a NUL-terminated JSON
 * document owned by the session; it stays valid until the next eqm_run on
 * the same session or eqm_session_free.  Returns one of the EQM_ codes;
 * a response is produced whenever parsing got far enough (also for
 * EQM_MISMATCH). */
int eqm_run(eqm_session* s, const char* request_json, const char** response_json);

/* Message describing the last non-OK return on this session. */
const char* eqm_last_error(const eqm_session* s);

const char* eqm_version(void);

#ifdef __cplusplus
}
#endif

#endif /* EQMIRROR_H */
