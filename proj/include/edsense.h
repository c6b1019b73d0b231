/* C API for the edsense library: energy-detection spectrum sensing
 * performance under random primary traffic and Rayleigh fading.
 *
 * All entry points return an edsense_status; a human-readable message for
 * the last failure on a config handle is available via edsense_error().
 */
#ifndef EDSENSE_H
#define EDSENSE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edsense_status {
    EDSENSE_OK = 0,
    EDSENSE_ERR_CONFIG = 1,     /* bad parameter or config file */
    EDSENSE_ERR_NUMERIC = 2,    /* bracketing or invariant failure */
    EDSENSE_ERR_VALIDATION = 3, /* Monte Carlo validation gate failed */
} edsense_status;

typedef enum edsense_mc_mode {
    EDSENSE_MC_EXACT = 0, /* at-most-one-transition trajectory law */
    EDSENSE_MC_CHAIN = 1, /* unrestricted per-sample Markov chain */
} edsense_mc_mode;

typedef struct edsense_config edsense_config; /* opaque */

edsense_config* edsense_config_create(void);
void edsense_config_destroy(edsense_config* cfg);

/* Load a key=value config file, or set a single key. Unknown keys and
 * malformed values return EDSENSE_ERR_CONFIG. */
edsense_status edsense_config_load(edsense_config* cfg, const char* path);
edsense_status edsense_config_set(edsense_config* cfg, const char* key, const char* value);

/* Serialize the full config into buf (NUL-terminated, truncated to buflen). */
edsense_status edsense_config_serialize(const edsense_config* cfg, char* buf, size_t buflen);

/* Message for the last failed call on this handle ("" if none). */
const char* edsense_error(const edsense_config* cfg);

typedef struct edsense_run_options {
    edsense_mc_mode mode;
    int conventional;       /* roc only: no-traffic bypass */
    int threads;            /* Monte Carlo worker count (result-invariant) */
    double perturb_eta_pct; /* validate only: debug threshold offset */
} edsense_run_options;

void edsense_run_options_init(edsense_run_options* opts);

/* Run a named experiment (roc, tradeoff, traffic, outage, optimize,
 * validate) writing CSV to out_path, or to stdout when out_path is NULL. */
edsense_status edsense_run(edsense_config* cfg, const char* command,
                           const edsense_run_options* opts, const char* out_path);

/* Point evaluation at the config's parameters. eta < 0 requests a solve
 * for the configured target detection probability. */
typedef struct edsense_point_report {
    double eta;
    double avg_pd;
    double avg_pf;
    double r_total;
    double p_success;
    double outage;
} edsense_point_report;

edsense_status edsense_report(edsense_config* cfg, double eta, edsense_point_report* out);

/* Scalar special functions (thread-safe, stateless). NaN on domain error. */
double edsense_regularized_upper_gamma(double u, double x);
double edsense_poisson_tail_sum(int u, double x);
double edsense_marcum_q(int u, double a, double b);

#ifdef __cplusplus
}
#endif

#endif /* EDSENSE_H */
