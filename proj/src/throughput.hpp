#ifndef EDSENSE_THROUGHPUT_HPP
#define EDSENSE_THROUGHPUT_HPP

#include "sensing.hpp"
#include "traffic.hpp"

namespace edsense {

// SU link quality constraint; all internal math is linear-scale.
struct SnrConstraint {
    double gamma_s;     // linear SINR threshold
    double rate_floor;  // log2(1 + gamma_s), bits/s/Hz

    explicit SnrConstraint(double gamma_s_linear);
    static SnrConstraint from_db(double gamma_s_db);
};

struct ThroughputReport {
    double r_h11;
    double r_h12;
    double r_h01;
    double r_h02;
    double r_total;
    double p_success;
    double outage;
    double avg_pd;
    double avg_pf;
};

// Minimum local throughput with PU absent: success probability of the
// fading secondary link times the rate floor.
double local_idle(const ChannelModel& channel, const SnrConstraint& constraint);

// Same with PU present; the interference link attenuates the success
// probability by lambda_chi / (lambda_chi + lambda_g gamma_s P_p / P_s).
double local_busy(const ChannelModel& channel, const SnrConstraint& constraint);

// PU present through sensing, departing after sample d of the frame
// (N <= d <= M): time-weighted mix of the busy and idle local throughputs.
double local_h11(int d, const SystemGeometry& geom, const ChannelModel& channel,
                 const SnrConstraint& constraint);

// PU absent through sensing, arriving after sample a (N <= a <= M).
double local_h01(int a, const SystemGeometry& geom, const ChannelModel& channel,
                 const SnrConstraint& constraint);

ThroughputReport throughput_components(const TrafficModel& traffic, const SystemGeometry& geom,
                                       const ChannelModel& channel,
                                       const SnrConstraint& constraint, double eta);

double outage(const ThroughputReport& report, const SnrConstraint& constraint);

struct OptimizeResult {
    double t_sense;
    double eta;
    ThroughputReport report;
};

// Exhaustive scan over even N in [2, M-2], re-solving the threshold for
// target_pd at each point; ties break to the smaller N.
OptimizeResult optimize_sensing_duration(const TrafficModel& traffic, const ChannelModel& channel,
                                         const SnrConstraint& constraint, double t_frame,
                                         double t_samp, double target_pd);

}  // namespace edsense

#endif
