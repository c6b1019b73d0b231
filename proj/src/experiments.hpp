#ifndef EDSENSE_EXPERIMENTS_HPP
#define EDSENSE_EXPERIMENTS_HPP

#include <iosfwd>

#include "config.hpp"

namespace edsense {

struct RunOptions {
    McMode mode = McMode::exact_model;
    bool conventional = false;      // no-traffic bypass for roc
    int threads = 1;
    double perturb_eta_pct = 0.0;   // debug: offsets the solved threshold
};

// Each runner writes one CSV table (header row, '.' decimal, full double
// precision) in sweep order. run_validate returns false when any quantity
// fails its |z| <= 3 gate.
void run_roc(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out);
void run_tradeoff(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out);
void run_traffic_sweep(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out);
void run_outage(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out);
void run_optimize(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out);
bool run_validate(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out);

}  // namespace edsense

#endif
