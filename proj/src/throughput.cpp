#include "throughput.hpp"

#include <cmath>
#include <stdexcept>

namespace edsense {

SnrConstraint::SnrConstraint(double gamma_s_linear) : gamma_s(gamma_s_linear) {
    if (!(gamma_s > 0.0)) throw std::domain_error("SnrConstraint: gamma_s must be positive");
    rate_floor = std::log2(1.0 + gamma_s);
}

SnrConstraint SnrConstraint::from_db(double gamma_s_db) {
    return SnrConstraint(std::pow(10.0, gamma_s_db / 10.0));
}

double local_idle(const ChannelModel& channel, const SnrConstraint& constraint) {
    double p_succ =
        std::exp(-channel.sigma_sr_sq * channel.lambda_g * constraint.gamma_s / channel.p_secondary);
    return p_succ * constraint.rate_floor;
}

double local_busy(const ChannelModel& channel, const SnrConstraint& constraint) {
    double atten = channel.lambda_chi /
                   (channel.lambda_chi +
                    channel.lambda_g * constraint.gamma_s * channel.p_primary / channel.p_secondary);
    return atten * local_idle(channel, constraint);
}

double local_h11(int d, const SystemGeometry& geom, const ChannelModel& channel,
                 const SnrConstraint& constraint) {
    const int n = geom.n_sense;
    const int m = geom.m_frame;
    if (d < n || d > m) throw std::out_of_range("local_h11: d must be in N..M");
    double w_busy = static_cast<double>(d - n) / (m - n);
    return w_busy * local_busy(channel, constraint) + (1.0 - w_busy) * local_idle(channel, constraint);
}

double local_h01(int a, const SystemGeometry& geom, const ChannelModel& channel,
                 const SnrConstraint& constraint) {
    const int n = geom.n_sense;
    const int m = geom.m_frame;
    if (a < n || a > m) throw std::out_of_range("local_h01: a must be in N..M");
    double w_busy = static_cast<double>(m - a) / (m - n);
    return w_busy * local_busy(channel, constraint) + (1.0 - w_busy) * local_idle(channel, constraint);
}

ThroughputReport throughput_components(const TrafficModel& traffic, const SystemGeometry& geom,
                                       const ChannelModel& channel,
                                       const SnrConstraint& constraint, double eta) {
    const HypothesisProbabilities hp = hypothesis_probabilities(traffic, geom);
    const SensingResult sr = sensing_result(traffic, geom, channel, eta);
    const int n = geom.n_sense;
    const int m = geom.m_frame;
    const double tx_frac = static_cast<double>(m - n) / m;
    const double l_idle = local_idle(channel, constraint);
    const double l_busy = local_busy(channel, constraint);

    // PU present through sensing: stays for the whole frame or departs at
    // d in N+1..M-1 during transmission.
    double sum11 = hp.no_departure * local_h11(m, geom, channel, constraint);
    for (int d = n + 1; d <= m - 1; ++d)
        sum11 += hp.departure_terms[d - 1] * local_h11(d, geom, channel, constraint);
    double r_h11 = tx_frac * (1.0 - sr.avg_pd) * sum11;

    // PU arrives during sensing: present for the whole transmission period.
    double sum12 = 0.0;
    for (int a = 1; a <= n; ++a) sum12 += hp.arrival_terms[a - 1];
    double r_h12 = tx_frac * (1.0 - sr.avg_pd) * sum12 * l_busy;

    // PU absent through sensing: stays away or arrives at a in N+1..M-1.
    double sum01 = hp.no_arrival * local_h01(m, geom, channel, constraint);
    for (int a = n + 1; a <= m - 1; ++a)
        sum01 += hp.arrival_terms[a - 1] * local_h01(a, geom, channel, constraint);
    double r_h01 = tx_frac * (1.0 - sr.avg_pf) * sum01;

    // PU departs during sensing: absent for the whole transmission period.
    double sum02 = 0.0;
    for (int d = 1; d <= n; ++d) sum02 += hp.departure_terms[d - 1];
    double r_h02 = tx_frac * (1.0 - sr.avg_pf) * sum02 * l_idle;

    ThroughputReport rep;
    rep.r_h11 = r_h11;
    rep.r_h12 = r_h12;
    rep.r_h01 = r_h01;
    rep.r_h02 = r_h02;
    rep.r_total = r_h11 + r_h12 + r_h01 + r_h02;
    rep.p_success = rep.r_total / constraint.rate_floor;
    rep.outage = 1.0 - rep.p_success;
    rep.avg_pd = sr.avg_pd;
    rep.avg_pf = sr.avg_pf;
    return rep;
}

double outage(const ThroughputReport& report, const SnrConstraint& constraint) {
    if (report.r_total > constraint.rate_floor * (1.0 + 1e-12))
        throw std::runtime_error("outage: r_total exceeds the rate floor");
    double value = 1.0 - report.r_total / constraint.rate_floor;
    return std::min(std::max(value, 0.0), 1.0);
}

OptimizeResult optimize_sensing_duration(const TrafficModel& traffic, const ChannelModel& channel,
                                         const SnrConstraint& constraint, double t_frame,
                                         double t_samp, double target_pd) {
    const int m = static_cast<int>(std::lround(t_frame / t_samp));
    if (m < 4) throw std::domain_error("optimize_sensing_duration: frame too short");

    bool have_best = false;
    OptimizeResult best{};
    for (int n = 2; n <= m - 2; n += 2) {
        double t_sense = n * t_samp;
        SystemGeometry geom = SystemGeometry::from_times(t_samp, t_sense, t_frame);
        double eta = solve_threshold(traffic, geom, channel, target_pd);
        ThroughputReport rep = throughput_components(traffic, geom, channel, constraint, eta);
        if (!have_best || rep.r_total > best.report.r_total) {
            best = OptimizeResult{t_sense, eta, rep};
            have_best = true;
        }
    }
    return best;
}

}  // namespace edsense
