#ifndef EDSENSE_SENSING_HPP
#define EDSENSE_SENSING_HPP

#include <vector>

#include "traffic.hpp"

namespace edsense {

// Rayleigh channel parameters, noise powers and transmit powers.
struct ChannelModel {
    double lambda_h;     // exponential rate of |h|^2, PT -> ST
    double lambda_chi;   // exponential rate of |chi|^2, PT -> SR
    double lambda_g;     // exponential rate of |g|^2, ST -> SR
    double sigma_st_sq;  // noise power at ST
    double sigma_sr_sq;  // noise power at SR
    double p_primary;    // PU transmit power
    double p_secondary;  // SU transmit power

    ChannelModel(double lambda_h, double lambda_chi, double lambda_g, double sigma_st_sq,
                 double sigma_sr_sq, double p_primary, double p_secondary);

    // average received primary SNR at ST
    double gamma_bar_p() const { return p_primary / (lambda_h * sigma_st_sq); }
};

// Conditional detection/false-alarm probabilities plus their traffic averages.
struct SensingResult {
    double avg_pd;
    double avg_pf;
    double pd_h11;                     // full-presence conditional
    double pf_h01;                     // full-absence conditional
    std::vector<double> pd_h12;        // index a-1, a = 1..N
    std::vector<double> pf_h02;        // index d-1, d = 1..N
};

// Rayleigh-averaged energy-detection probability with mean noncentrality
// scale snr_scale (u*gbar, ((2u-a)/2)*gbar or (d/2)*gbar). snr_scale = 0 is
// the central limit and returns the plain chi-square tail.
double rayleigh_pd_kernel(int u, double eta, double snr_scale);

double pd_h11(int u, double eta, double gamma_bar_p);
double pd_h12(int u, int a, double eta, double gamma_bar_p);
double pf_h01(int u, double eta);
double pf_h02(int u, int d, double eta, double gamma_bar_p);

// One pass over the a/d conditional sweeps; avg_pd and avg_pf are the
// hypothesis-probability weighted combinations.
SensingResult sensing_result(const TrafficModel& traffic, const SystemGeometry& geom,
                             const ChannelModel& channel, double eta);

double average_pd(const TrafficModel& traffic, const SystemGeometry& geom,
                  const ChannelModel& channel, double eta);
double average_pf(const TrafficModel& traffic, const SystemGeometry& geom,
                  const ChannelModel& channel, double eta);

// Inverts the strictly decreasing eta -> avg_pd map by bisection so that
// |avg_pd(eta) - target_pd| <= 1e-9. Throws std::runtime_error if no
// bracket can be established.
double solve_threshold(const TrafficModel& traffic, const SystemGeometry& geom,
                       const ChannelModel& channel, double target_pd);

}  // namespace edsense

#endif
