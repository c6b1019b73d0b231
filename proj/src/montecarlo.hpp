#ifndef EDSENSE_MONTECARLO_HPP
#define EDSENSE_MONTECARLO_HPP

#include <cstdint>
#include <random>
#include <string>

#include "sensing.hpp"
#include "throughput.hpp"
#include "traffic.hpp"

namespace edsense {

enum class McMode {
    exact_model,  // trajectories drawn from the at-most-one-transition law
    full_chain,   // unrestricted per-sample Markov chain
};

enum class FrameHypothesis : std::uint8_t { h11, h12, h01, h02, other };

struct FrameOutcome {
    FrameHypothesis hypothesis;
    int change_sample;  // a or d, 0 if no transition
    int busy_sense;     // busy samples among the N sensing samples
    int busy_tx;        // busy samples among the M-N transmission samples
    double detector_statistic;
    bool decided_busy;
    bool transmitted;
    double throughput_contribution;
};

struct McEstimate {
    long n_frames;
    double avg_pd_hat;
    double avg_pf_hat;
    double r_hat;
    double outage_hat;
    double se_pd;  // NaN when the class count is too small
    double se_pf;
    double se_r;
    double se_outage;
    long n_h1;  // frames conditioning avg_pd_hat
    long n_h0;
    long n_other;
    McMode mode;
    std::uint64_t seed;
};

// Deterministic per-frame RNG stream: the engine is seeded from
// (root seed, frame index) so the worker count cannot change results.
std::mt19937_64 frame_rng(std::uint64_t seed, std::uint64_t frame_index);

FrameOutcome sample_trajectory(const TrafficModel& traffic, const SystemGeometry& geom,
                               McMode mode, std::mt19937_64& rng);

// Normalized detector statistic: noncentral chi-square with 2u degrees of
// freedom and noncentrality busy_sense * gamma, gamma drawn fresh from the
// exponential SNR density.
double sample_detector_statistic(int busy_sense, const ChannelModel& channel,
                                 const SystemGeometry& geom, std::mt19937_64& rng);

// One fading draw of (g, chi) per frame; the busy/idle sub-periods of the
// transmission share the secondary-link gain.
double simulate_transmission(int busy_tx, const ChannelModel& channel,
                             const SnrConstraint& constraint, const SystemGeometry& geom,
                             std::mt19937_64& rng);

McEstimate estimate(const TrafficModel& traffic, const SystemGeometry& geom,
                    const ChannelModel& channel, const SnrConstraint& constraint, double eta,
                    long n_frames, std::uint64_t seed, McMode mode, int n_threads = 1);

// test hooks: the raw samplers behind the frame pipeline
double draw_exponential(double mean, std::mt19937_64& rng);
double draw_noncentral_chi_square(int dof, double noncentrality, std::mt19937_64& rng);

}  // namespace edsense

#endif
