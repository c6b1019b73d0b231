#ifndef EDSENSE_CONFIG_HPP
#define EDSENSE_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "montecarlo.hpp"
#include "sensing.hpp"
#include "throughput.hpp"
#include "traffic.hpp"

namespace edsense {

// Flat key=value experiment description. Noise variances are derived from
// the two SNR keys: sigma_st_sq = p_p / (lambda_h 10^(primary_snr_db/10)),
// sigma_sr_sq = p_s / (lambda_g 10^(secondary_snr_db/10)).
struct ExperimentConfig {
    double t_samp_ms = 0.1;
    double t_sense_ms = 5.0;
    double t_frame_ms = 25.0;
    double alpha = 1.0;
    double beta = 1.0;
    double lambda_h = 1.0;
    double lambda_chi = 1.0;
    double lambda_g = 1.0;
    double primary_snr_db = 5.0;
    double secondary_snr_db = 20.0;
    double p_p = 1.0;
    double p_s = 1.0;
    double gamma_s_db = 5.0;
    double target_pd = 0.9;
    long mc_frames = 100000;
    std::uint64_t seed = 1;
    std::string sweep_param;  // empty = single point
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    int sweep_steps = 1;

    static ExperimentConfig parse(std::istream& in);
    static ExperimentConfig load_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    std::string serialize() const;

    // field-level invariant checks; throws std::invalid_argument
    void validate() const;

    TrafficModel traffic() const;
    SystemGeometry geometry() const;
    ChannelModel channel() const;
    SnrConstraint constraint() const;

    double sweep_value(int step) const;
};

}  // namespace edsense

#endif
