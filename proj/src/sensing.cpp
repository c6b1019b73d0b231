#include "sensing.hpp"

#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace edsense {

ChannelModel::ChannelModel(double lambda_h_, double lambda_chi_, double lambda_g_,
                           double sigma_st_sq_, double sigma_sr_sq_, double p_primary_,
                           double p_secondary_)
    : lambda_h(lambda_h_),
      lambda_chi(lambda_chi_),
      lambda_g(lambda_g_),
      sigma_st_sq(sigma_st_sq_),
      sigma_sr_sq(sigma_sr_sq_),
      p_primary(p_primary_),
      p_secondary(p_secondary_) {
    if (!(lambda_h > 0.0) || !(lambda_chi > 0.0) || !(lambda_g > 0.0))
        throw std::domain_error("ChannelModel: rates must be strictly positive");
    if (!(sigma_st_sq > 0.0) || !(sigma_sr_sq > 0.0))
        throw std::domain_error("ChannelModel: noise powers must be strictly positive");
    if (!(p_primary > 0.0) || !(p_secondary > 0.0))
        throw std::domain_error("ChannelModel: transmit powers must be strictly positive");
}

double rayleigh_pd_kernel(int u, double eta, double snr_scale) {
    if (u < 1) throw std::domain_error("rayleigh_pd_kernel: u must be >= 1");
    if (!(eta >= 0.0)) throw std::domain_error("rayleigh_pd_kernel: eta must be nonnegative");
    if (!(snr_scale >= 0.0))
        throw std::domain_error("rayleigh_pd_kernel: snr_scale must be nonnegative");
    if (eta == 0.0) return 1.0;
    if (snr_scale == 0.0) return regularized_upper_gamma(u, 0.5 * eta);

    const double m = snr_scale;
    const double first = poisson_tail_sum(u, 0.5 * eta);
    // The bracketed difference collapses to a lower incomplete gamma:
    //   e^{-eta/(2(1+m))} - e^{-eta/2} sum_{i<u-1} z^i/i!
    //     = e^{-eta/(2(1+m))} * P(u-1, z),  z = eta m / (2(1+m)),
    // which keeps the ((1+m)/m)^{u-1} prefactor finite in log space as m -> 0.
    const double z = 0.5 * eta * m / (1.0 + m);
    const double log_second = (u - 1) * std::log1p(1.0 / m) - 0.5 * eta / (1.0 + m) +
                              log_regularized_lower_gamma(static_cast<double>(u - 1), z);
    const double value = first + std::exp(log_second);
    return std::min(std::max(value, 0.0), 1.0);
}

double pd_h11(int u, double eta, double gamma_bar_p) {
    return rayleigh_pd_kernel(u, eta, u * gamma_bar_p);
}

double pd_h12(int u, int a, double eta, double gamma_bar_p) {
    if (a < 0 || a > 2 * u) throw std::out_of_range("pd_h12: a must be in 0..N");
    return rayleigh_pd_kernel(u, eta, 0.5 * (2 * u - a) * gamma_bar_p);
}

double pf_h01(int u, double eta) {
    if (!(eta >= 0.0)) throw std::domain_error("pf_h01: eta must be nonnegative");
    return regularized_upper_gamma(u, 0.5 * eta);
}

double pf_h02(int u, int d, double eta, double gamma_bar_p) {
    if (d < 0 || d > 2 * u) throw std::out_of_range("pf_h02: d must be in 0..N");
    if (d == 0) return pf_h01(u, eta);
    return rayleigh_pd_kernel(u, eta, 0.5 * d * gamma_bar_p);
}

SensingResult sensing_result(const TrafficModel& traffic, const SystemGeometry& geom,
                             const ChannelModel& channel, double eta) {
    const HypothesisProbabilities hp = hypothesis_probabilities(traffic, geom);
    const int u = geom.u;
    const int n = geom.n_sense;
    const double gbar = channel.gamma_bar_p();

    SensingResult r;
    r.pd_h11 = pd_h11(u, eta, gbar);
    r.pf_h01 = pf_h01(u, eta);
    r.pd_h12.resize(n);
    r.pf_h02.resize(n);
    for (int k = 1; k <= n; ++k) {
        r.pd_h12[k - 1] = pd_h12(u, k, eta, gbar);
        r.pf_h02[k - 1] = pf_h02(u, k, eta, gbar);
    }

    const double denom_d = hp.p_h11 + hp.p_h12;
    const double denom_f = hp.p_h01 + hp.p_h02;
    if (denom_d < 1e-300 || denom_f < 1e-300)
        throw std::runtime_error("sensing_result: degenerate traffic, hypothesis mass underflow");

    double num_d = hp.p_h11 * r.pd_h11;
    for (int a = 1; a <= n; ++a) num_d += hp.arrival_terms[a - 1] * r.pd_h12[a - 1];
    double num_f = hp.p_h01 * r.pf_h01;
    for (int d = 1; d <= n; ++d) num_f += hp.departure_terms[d - 1] * r.pf_h02[d - 1];

    r.avg_pd = num_d / denom_d;
    r.avg_pf = num_f / denom_f;
    return r;
}

double average_pd(const TrafficModel& traffic, const SystemGeometry& geom,
                  const ChannelModel& channel, double eta) {
    return sensing_result(traffic, geom, channel, eta).avg_pd;
}

double average_pf(const TrafficModel& traffic, const SystemGeometry& geom,
                  const ChannelModel& channel, double eta) {
    return sensing_result(traffic, geom, channel, eta).avg_pf;
}

double solve_threshold(const TrafficModel& traffic, const SystemGeometry& geom,
                       const ChannelModel& channel, double target_pd) {
    if (!(target_pd > 0.0 && target_pd < 1.0))
        throw std::domain_error("solve_threshold: target_pd must be in (0,1)");

    auto f = [&](double eta) { return average_pd(traffic, geom, channel, eta); };

    double lo = 0.0;                 // f(0) = 1 > target
    double hi = 2.0 * geom.u;        // grow until f(hi) < target
    int grow = 0;
    while (f(hi) > target_pd) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 200) throw std::runtime_error("solve_threshold: failed to bracket target");
    }
    for (int i = 0; i < 400; ++i) {
        double mid = 0.5 * (lo + hi);
        double v = f(mid);
        if (std::fabs(v - target_pd) <= 1e-9) return mid;
        if (v > target_pd)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * (1.0 + hi)) break;
    }
    double mid = 0.5 * (lo + hi);
    if (std::fabs(f(mid) - target_pd) > 1e-9)
        throw std::runtime_error("solve_threshold: bisection failed to reach tolerance");
    return mid;
}

}  // namespace edsense
