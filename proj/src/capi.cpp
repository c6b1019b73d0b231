#include "edsense.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "config.hpp"
#include "experiments.hpp"
#include "specfun.hpp"

struct edsense_config {
    edsense::ExperimentConfig cfg;
    std::string error;
};

namespace {

edsense_status classify(const std::exception& e, edsense_config* h) {
    h->error = e.what();
    if (dynamic_cast<const std::invalid_argument*>(&e)) return EDSENSE_ERR_CONFIG;
    if (dynamic_cast<const std::domain_error*>(&e)) return EDSENSE_ERR_CONFIG;
    if (dynamic_cast<const std::out_of_range*>(&e)) return EDSENSE_ERR_CONFIG;
    return EDSENSE_ERR_NUMERIC;
}

}  // namespace

extern "C" {

edsense_config* edsense_config_create(void) { return new (std::nothrow) edsense_config; }

void edsense_config_destroy(edsense_config* cfg) { delete cfg; }

edsense_status edsense_config_load(edsense_config* cfg, const char* path) {
    if (!cfg || !path) return EDSENSE_ERR_CONFIG;
    try {
        cfg->cfg = edsense::ExperimentConfig::load_file(path);
        cfg->error.clear();
        return EDSENSE_OK;
    } catch (const std::exception& e) {
        return classify(e, cfg);
    }
}

edsense_status edsense_config_set(edsense_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return EDSENSE_ERR_CONFIG;
    try {
        cfg->cfg.set(key, value);
        cfg->error.clear();
        return EDSENSE_OK;
    } catch (const std::exception& e) {
        return classify(e, cfg);
    }
}

edsense_status edsense_config_serialize(const edsense_config* cfg, char* buf, size_t buflen) {
    if (!cfg || !buf || buflen == 0) return EDSENSE_ERR_CONFIG;
    std::string s = cfg->cfg.serialize();
    std::strncpy(buf, s.c_str(), buflen - 1);
    buf[buflen - 1] = '\0';
    return s.size() < buflen ? EDSENSE_OK : EDSENSE_ERR_CONFIG;
}

const char* edsense_error(const edsense_config* cfg) { return cfg ? cfg->error.c_str() : ""; }

void edsense_run_options_init(edsense_run_options* opts) {
    if (!opts) return;
    opts->mode = EDSENSE_MC_EXACT;
    opts->conventional = 0;
    opts->threads = 1;
    opts->perturb_eta_pct = 0.0;
}

edsense_status edsense_run(edsense_config* cfg, const char* command,
                           const edsense_run_options* opts, const char* out_path) {
    if (!cfg || !command) return EDSENSE_ERR_CONFIG;
    edsense_run_options local;
    edsense_run_options_init(&local);
    if (opts) local = *opts;

    edsense::RunOptions ro;
    ro.mode = local.mode == EDSENSE_MC_CHAIN ? edsense::McMode::full_chain
                                             : edsense::McMode::exact_model;
    ro.conventional = local.conventional != 0;
    ro.threads = local.threads;
    ro.perturb_eta_pct = local.perturb_eta_pct;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (out_path) {
        file.open(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            cfg->error = std::string("cannot open output file: ") + out_path;
            return EDSENSE_ERR_CONFIG;
        }
        out = &file;
    }

    try {
        std::string cmd = command;
        if (cmd == "roc") {
            edsense::run_roc(cfg->cfg, ro, *out);
        } else if (cmd == "tradeoff") {
            edsense::run_tradeoff(cfg->cfg, ro, *out);
        } else if (cmd == "traffic") {
            edsense::run_traffic_sweep(cfg->cfg, ro, *out);
        } else if (cmd == "outage") {
            edsense::run_outage(cfg->cfg, ro, *out);
        } else if (cmd == "optimize") {
            edsense::run_optimize(cfg->cfg, ro, *out);
        } else if (cmd == "validate") {
            if (!edsense::run_validate(cfg->cfg, ro, *out)) {
                cfg->error = "validation failed: at least one |z| > 3";
                return EDSENSE_ERR_VALIDATION;
            }
        } else {
            cfg->error = "unknown command: " + cmd;
            return EDSENSE_ERR_CONFIG;
        }
        cfg->error.clear();
        return EDSENSE_OK;
    } catch (const std::exception& e) {
        return classify(e, cfg);
    }
}

edsense_status edsense_report(edsense_config* cfg, double eta, edsense_point_report* out) {
    if (!cfg || !out) return EDSENSE_ERR_CONFIG;
    try {
        cfg->cfg.validate();
        auto traffic = cfg->cfg.traffic();
        auto geom = cfg->cfg.geometry();
        auto channel = cfg->cfg.channel();
        auto constraint = cfg->cfg.constraint();
        if (eta < 0.0)
            eta = edsense::solve_threshold(traffic, geom, channel, cfg->cfg.target_pd);
        auto rep = edsense::throughput_components(traffic, geom, channel, constraint, eta);
        out->eta = eta;
        out->avg_pd = rep.avg_pd;
        out->avg_pf = rep.avg_pf;
        out->r_total = rep.r_total;
        out->p_success = rep.p_success;
        out->outage = rep.outage;
        cfg->error.clear();
        return EDSENSE_OK;
    } catch (const std::exception& e) {
        return classify(e, cfg);
    }
}

double edsense_regularized_upper_gamma(double u, double x) {
    try {
        return edsense::regularized_upper_gamma(u, x);
    } catch (...) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

double edsense_poisson_tail_sum(int u, double x) {
    try {
        return edsense::poisson_tail_sum(u, x);
    } catch (...) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

double edsense_marcum_q(int u, double a, double b) {
    try {
        return edsense::marcum_q(u, a, b);
    } catch (...) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // extern "C"
