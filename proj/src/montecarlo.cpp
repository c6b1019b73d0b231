#include "montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace edsense {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
    // open at 0 so logs are safe
    return ((rng() >> 11) + 0.5) * 0x1.0p-53;
}

double draw_normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Marsaglia-Tsang, unit scale; shapes below 1 boosted via U^{1/a}.
double draw_gamma(double shape, std::mt19937_64& rng) {
    if (shape < 1.0) {
        double u = uniform01(rng);
        return draw_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = draw_normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform01(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double draw_exponential(double mean, std::mt19937_64& rng) {
    return -mean * std::log(uniform01(rng));
}

double draw_noncentral_chi_square(int dof, double noncentrality, std::mt19937_64& rng) {
    if (dof < 2) throw std::domain_error("noncentral chi-square: need dof >= 2");
    double z = draw_normal(rng) + std::sqrt(noncentrality);
    double rest = 2.0 * draw_gamma(0.5 * (dof - 1), rng);
    return z * z + rest;
}

std::mt19937_64 frame_rng(std::uint64_t seed, std::uint64_t frame_index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ frame_index));
}

namespace {

FrameOutcome sample_trajectory_impl(const TrafficModel& traffic, const SystemGeometry& geom,
                                    const HypothesisProbabilities* exact_hp, McMode mode,
                                    std::mt19937_64& rng) {
    const int n = geom.n_sense;
    const int m = geom.m_frame;
    FrameOutcome out{};

    if (mode == McMode::exact_model) {
        const HypothesisProbabilities& hp = *exact_hp;
        double total = hp.no_arrival + hp.no_departure;
        for (double t : hp.arrival_terms) total += t;
        for (double t : hp.departure_terms) total += t;

        double r = uniform01(rng) * total;
        bool arrival = false;
        int change = 0;  // 0 means no transition
        if ((r -= hp.no_arrival) < 0.0) {
            out.hypothesis = FrameHypothesis::h01;
        } else if ((r -= hp.no_departure) < 0.0) {
            out.hypothesis = FrameHypothesis::h11;
        } else {
            int k = 0;
            for (; k < m - 1; ++k) {
                if ((r -= hp.arrival_terms[k]) < 0.0) {
                    arrival = true;
                    break;
                }
            }
            if (!arrival) {
                for (k = 0; k < m - 1; ++k)
                    if ((r -= hp.departure_terms[k]) < 0.0) break;
                k = std::min(k, m - 2);
            }
            change = k + 1;
            if (arrival)
                out.hypothesis = change <= n ? FrameHypothesis::h12 : FrameHypothesis::h01;
            else
                out.hypothesis = change <= n ? FrameHypothesis::h02 : FrameHypothesis::h11;
        }
        out.change_sample = change;
        bool busy_first;
        if (change == 0)
            busy_first = (out.hypothesis == FrameHypothesis::h11);
        else
            busy_first = !arrival;
        // samples 1..change keep the initial state, the rest flipped
        int prefix = (change == 0) ? m : change;
        int busy_sense, busy_tx;
        if (busy_first) {
            busy_sense = std::min(prefix, n);
            busy_tx = std::max(prefix - n, 0);
        } else {
            busy_sense = n - std::min(prefix, n);
            busy_tx = (m - n) - std::max(prefix - n, 0);
        }
        if (change == 0 && !busy_first) busy_tx = 0;
        if (change == 0 && busy_first) busy_tx = m - n;
        out.busy_sense = busy_sense;
        out.busy_tx = busy_tx;
        return out;
    }

    // full chain: stationary start, M per-sample steps
    const TransitionMatrix tm = transition_matrix(traffic, geom.t_samp);
    bool busy = uniform01(rng) < traffic.stationary_busy();
    int transitions = 0;
    int first_change = 0;
    bool started_busy = busy;
    int busy_sense = 0, busy_tx = 0;
    for (int k = 1; k <= m; ++k) {
        double stay = busy ? tm.p_bb : tm.p_ii;
        if (uniform01(rng) >= stay) {
            busy = !busy;
            if (++transitions == 1) first_change = k - 1;  // Eq-style prefix length
        }
        if (busy) (k <= n) ? ++busy_sense : ++busy_tx;
    }
    out.busy_sense = busy_sense;
    out.busy_tx = busy_tx;
    if (transitions == 0) {
        out.hypothesis = started_busy ? FrameHypothesis::h11 : FrameHypothesis::h01;
        out.change_sample = 0;
    } else if (transitions == 1 && first_change >= 1) {
        out.change_sample = first_change;
        if (started_busy)
            out.hypothesis = first_change <= n ? FrameHypothesis::h02 : FrameHypothesis::h11;
        else
            out.hypothesis = first_change <= n ? FrameHypothesis::h12 : FrameHypothesis::h01;
    } else {
        // >= 2 transitions, or a flip at the very first step: outside the
        // quaternary decomposition
        out.hypothesis = FrameHypothesis::other;
        out.change_sample = first_change;
    }
    return out;
}

}  // namespace

FrameOutcome sample_trajectory(const TrafficModel& traffic, const SystemGeometry& geom,
                               McMode mode, std::mt19937_64& rng) {
    if (mode == McMode::exact_model) {
        const HypothesisProbabilities hp = hypothesis_probabilities(traffic, geom);
        return sample_trajectory_impl(traffic, geom, &hp, mode, rng);
    }
    return sample_trajectory_impl(traffic, geom, nullptr, mode, rng);
}

double sample_detector_statistic(int busy_sense, const ChannelModel& channel,
                                 const SystemGeometry& geom, std::mt19937_64& rng) {
    double gamma = draw_exponential(channel.gamma_bar_p(), rng);
    return draw_noncentral_chi_square(2 * geom.u, busy_sense * gamma, rng);
}

double simulate_transmission(int busy_tx, const ChannelModel& channel,
                             const SnrConstraint& constraint, const SystemGeometry& geom,
                             std::mt19937_64& rng) {
    const int n = geom.n_sense;
    const int m = geom.m_frame;
    double g2 = draw_exponential(1.0 / channel.lambda_g, rng);
    double chi2 = draw_exponential(1.0 / channel.lambda_chi, rng);
    double snr_idle = channel.p_secondary * g2 / channel.sigma_sr_sq;
    double snr_busy =
        channel.p_secondary * g2 / (channel.sigma_sr_sq + channel.p_primary * chi2);
    double w_busy = static_cast<double>(busy_tx) / (m - n);
    double succ = (1.0 - w_busy) * (snr_idle > constraint.gamma_s ? 1.0 : 0.0) +
                  w_busy * (snr_busy > constraint.gamma_s ? 1.0 : 0.0);
    return (static_cast<double>(m - n) / m) * constraint.rate_floor * succ;
}

McEstimate estimate(const TrafficModel& traffic, const SystemGeometry& geom,
                    const ChannelModel& channel, const SnrConstraint& constraint, double eta,
                    long n_frames, std::uint64_t seed, McMode mode, int n_threads) {
    if (n_frames < 1) throw std::domain_error("estimate: n_frames must be >= 1");
    if (n_threads < 1) n_threads = 1;

    std::vector<std::uint8_t> cls(n_frames);
    std::vector<std::uint8_t> decided_busy(n_frames);
    std::vector<double> contribution(n_frames);

    const HypothesisProbabilities hp = hypothesis_probabilities(traffic, geom);
    auto work = [&](long begin, long end) {
        for (long i = begin; i < end; ++i) {
            std::mt19937_64 rng = frame_rng(seed, static_cast<std::uint64_t>(i));
            FrameOutcome fo = sample_trajectory_impl(traffic, geom, &hp, mode, rng);
            fo.detector_statistic = sample_detector_statistic(fo.busy_sense, channel, geom, rng);
            fo.decided_busy = fo.detector_statistic > eta;
            fo.transmitted = !fo.decided_busy;
            fo.throughput_contribution =
                fo.transmitted ? simulate_transmission(fo.busy_tx, channel, constraint, geom, rng)
                               : 0.0;
            cls[i] = static_cast<std::uint8_t>(fo.hypothesis);
            decided_busy[i] = fo.decided_busy ? 1 : 0;
            contribution[i] = fo.throughput_contribution;
        }
    };

    if (n_threads == 1) {
        work(0, n_frames);
    } else {
        std::vector<std::thread> pool;
        long chunk = (n_frames + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            long begin = t * chunk;
            long end = std::min(n_frames, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    // frame order is fixed, so this reduction is schedule-independent
    long n_h1 = 0, n_h0 = 0, n_other = 0;
    long det_h1 = 0, det_h0 = 0;
    double sum_c = 0.0, sum_c2 = 0.0;
    for (long i = 0; i < n_frames; ++i) {
        auto h = static_cast<FrameHypothesis>(cls[i]);
        if (h == FrameHypothesis::h11 || h == FrameHypothesis::h12) {
            ++n_h1;
            det_h1 += decided_busy[i];
        } else if (h == FrameHypothesis::h01 || h == FrameHypothesis::h02) {
            ++n_h0;
            det_h0 += decided_busy[i];
        } else {
            ++n_other;
        }
        sum_c += contribution[i];
        sum_c2 += contribution[i] * contribution[i];
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    McEstimate est{};
    est.n_frames = n_frames;
    est.n_h1 = n_h1;
    est.n_h0 = n_h0;
    est.n_other = n_other;
    est.mode = mode;
    est.seed = seed;
    est.avg_pd_hat = n_h1 > 0 ? static_cast<double>(det_h1) / n_h1 : nan;
    est.avg_pf_hat = n_h0 > 0 ? static_cast<double>(det_h0) / n_h0 : nan;
    est.r_hat = sum_c / n_frames;
    est.outage_hat = 1.0 - est.r_hat / constraint.rate_floor;
    est.se_pd = n_h1 > 1 ? std::sqrt(est.avg_pd_hat * (1.0 - est.avg_pd_hat) / n_h1) : nan;
    est.se_pf = n_h0 > 1 ? std::sqrt(est.avg_pf_hat * (1.0 - est.avg_pf_hat) / n_h0) : nan;
    if (n_frames > 1) {
        double var = (sum_c2 - sum_c * sum_c / n_frames) / (n_frames - 1);
        est.se_r = std::sqrt(std::max(var, 0.0) / n_frames);
        est.se_outage = est.se_r / constraint.rate_floor;
    } else {
        est.se_r = nan;
        est.se_outage = nan;
    }
    return est;
}

}  // namespace edsense
