#ifndef EDSENSE_TRAFFIC_HPP
#define EDSENSE_TRAFFIC_HPP

#include <vector>

namespace edsense {

// Two-state busy/idle primary traffic with exponential holding times.
struct TrafficModel {
    double alpha;  // busy-state rate (1/s)
    double beta;   // idle-state rate (1/s)

    TrafficModel(double alpha_, double beta_);

    double stationary_busy() const { return alpha / (alpha + beta); }
    double stationary_idle() const { return beta / (alpha + beta); }
};

// Row-stochastic transition probabilities over an interval t.
struct TransitionMatrix {
    double p_ii;
    double p_ib;
    double p_bi;
    double p_bb;
};

// Frame timing and the derived sample counts.
struct SystemGeometry {
    double t_samp;   // sample interval (s)
    double t_sense;  // sensing duration (s)
    double t_frame;  // frame duration (s)
    int n_sense;     // N = round(t_sense / t_samp), even and >= 2
    int m_frame;     // M = round(t_frame / t_samp)
    int u;           // time-bandwidth product N / 2

    static SystemGeometry from_times(double t_samp, double t_sense, double t_frame);

    // M * t_samp / min(1/alpha, 1/beta); the at-most-one-transition
    // approximation needs this well below 1.
    double validity_ratio(const TrafficModel& traffic) const;
};

// The at-most-one-transition frame decomposition. arrival_terms[a-1] holds
// P_I P_II^a P_IB P_BB^{M-a-1} for a = 1..M-1, departure_terms likewise for
// d; the no-transition masses P_I P_II^M and P_B P_BB^M are kept separately.
struct HypothesisProbabilities {
    double p_h11;
    double p_h12;
    double p_h01;
    double p_h02;
    double no_arrival;    // P_I P_II^M
    double no_departure;  // P_B P_BB^M
    std::vector<double> arrival_terms;
    std::vector<double> departure_terms;
};

TransitionMatrix transition_matrix(const TrafficModel& traffic, double t);

// Quaternary hypothesis masses with the per-sample matrix taken at t_samp.
HypothesisProbabilities hypothesis_probabilities(const TrafficModel& traffic,
                                                 const SystemGeometry& geom);

// 1 - sum of the four hypothesis masses: the neglected >=2-transition mass.
double residual_mass(const HypothesisProbabilities& hp);

}  // namespace edsense

#endif
