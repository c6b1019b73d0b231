#include "traffic.hpp"

#include <cmath>
#include <stdexcept>

namespace edsense {

TrafficModel::TrafficModel(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::domain_error("TrafficModel: rates must be strictly positive");
}

SystemGeometry SystemGeometry::from_times(double t_samp, double t_sense, double t_frame) {
    if (!(t_samp > 0.0)) throw std::domain_error("SystemGeometry: t_samp must be positive");
    if (!(t_sense > 0.0 && t_sense < t_frame))
        throw std::domain_error("SystemGeometry: need 0 < t_sense < t_frame");
    SystemGeometry g;
    g.t_samp = t_samp;
    g.t_sense = t_sense;
    g.t_frame = t_frame;
    g.n_sense = static_cast<int>(std::lround(t_sense / t_samp));
    g.m_frame = static_cast<int>(std::lround(t_frame / t_samp));
    if (g.n_sense < 2 || g.n_sense % 2 != 0)
        throw std::domain_error("SystemGeometry: N must be even and >= 2");
    if (g.n_sense >= g.m_frame)
        throw std::domain_error("SystemGeometry: N must be smaller than M");
    g.u = g.n_sense / 2;
    return g;
}

double SystemGeometry::validity_ratio(const TrafficModel& traffic) const {
    double min_hold = 1.0 / std::max(traffic.alpha, traffic.beta);
    return m_frame * t_samp / min_hold;
}

TransitionMatrix transition_matrix(const TrafficModel& traffic, double t) {
    if (!(t >= 0.0)) throw std::domain_error("transition_matrix: t must be nonnegative");
    double a = traffic.alpha;
    double b = traffic.beta;
    double e = std::exp(-(a + b) * t);
    double s = a + b;
    // rows converge to the stationary law (P_I, P_B) = (beta, alpha)/(alpha+beta)
    return TransitionMatrix{
        (b + a * e) / s,  // p_ii
        (a - a * e) / s,  // p_ib
        (b - b * e) / s,  // p_bi
        (a + b * e) / s,  // p_bb
    };
}

HypothesisProbabilities hypothesis_probabilities(const TrafficModel& traffic,
                                                 const SystemGeometry& geom) {
    const TransitionMatrix tm = transition_matrix(traffic, geom.t_samp);
    const int m = geom.m_frame;
    const int n = geom.n_sense;
    const double p_i = traffic.stationary_idle();
    const double p_b = traffic.stationary_busy();

    // powers in log space; self-transition probabilities are in (0, 1)
    const double log_pii = std::log(tm.p_ii);
    const double log_pbb = std::log(tm.p_bb);

    HypothesisProbabilities hp{};
    hp.no_arrival = p_i * std::exp(m * log_pii);
    hp.no_departure = p_b * std::exp(m * log_pbb);
    hp.arrival_terms.resize(m - 1);
    hp.departure_terms.resize(m - 1);
    for (int k = 1; k <= m - 1; ++k) {
        hp.arrival_terms[k - 1] =
            p_i * std::exp(k * log_pii) * tm.p_ib * std::exp((m - k - 1) * log_pbb);
        hp.departure_terms[k - 1] =
            p_b * std::exp(k * log_pbb) * tm.p_bi * std::exp((m - k - 1) * log_pii);
    }

    hp.p_h11 = hp.no_departure;
    hp.p_h01 = hp.no_arrival;
    hp.p_h12 = 0.0;
    hp.p_h02 = 0.0;
    for (int a = 1; a <= m - 1; ++a) {
        if (a <= n)
            hp.p_h12 += hp.arrival_terms[a - 1];
        else
            hp.p_h01 += hp.arrival_terms[a - 1];
    }
    for (int d = 1; d <= m - 1; ++d) {
        if (d <= n)
            hp.p_h02 += hp.departure_terms[d - 1];
        else
            hp.p_h11 += hp.departure_terms[d - 1];
    }
    return hp;
}

double residual_mass(const HypothesisProbabilities& hp) {
    double r = 1.0 - (hp.p_h11 + hp.p_h12 + hp.p_h01 + hp.p_h02);
    if (r < -1e-12) throw std::runtime_error("residual_mass: hypothesis masses exceed 1");
    return std::max(r, 0.0);
}

}  // namespace edsense
