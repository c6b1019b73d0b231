#include "experiments.hpp"

#include <cmath>
#include <locale>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace edsense {

namespace {

void csv_format(std::ostream& out) {
    out.imbue(std::locale::classic());
    out.precision(17);
}

std::vector<double> sweep_grid(const ExperimentConfig& cfg, double def_from, double def_to,
                               int def_steps) {
    std::vector<double> grid;
    if (cfg.sweep_param.empty()) {
        for (int i = 0; i < def_steps; ++i)
            grid.push_back(def_from + (def_to - def_from) * i / (def_steps - 1));
    } else {
        for (int i = 0; i < cfg.sweep_steps; ++i) grid.push_back(cfg.sweep_value(i));
    }
    return grid;
}

}  // namespace

void run_roc(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out) {
    cfg.validate();
    if (!cfg.sweep_param.empty() && cfg.sweep_param != "eta")
        throw std::invalid_argument("roc: sweep_param must be 'eta'");
    const TrafficModel traffic = cfg.traffic();
    const SystemGeometry geom = cfg.geometry();
    const ChannelModel channel = cfg.channel();
    const std::vector<double> etas = sweep_grid(cfg, 0.1, 6.0 * geom.u, 60);

    csv_format(out);
    out << "eta,avg_pf,avg_pd\n";
    for (double eta : etas) {
        double pd, pf;
        if (opts.conventional) {
            pd = pd_h11(geom.u, eta, channel.gamma_bar_p());
            pf = pf_h01(geom.u, eta);
        } else {
            SensingResult sr = sensing_result(traffic, geom, channel, eta);
            pd = sr.avg_pd;
            pf = sr.avg_pf;
        }
        out << eta << "," << pf << "," << pd << "\n";
    }
}

void run_tradeoff(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out) {
    (void)opts;
    cfg.validate();
    if (!cfg.sweep_param.empty() && cfg.sweep_param != "t_sense_ms")
        throw std::invalid_argument("tradeoff: sweep_param must be 't_sense_ms'");
    const TrafficModel traffic = cfg.traffic();
    const ChannelModel channel = cfg.channel();
    const SnrConstraint constraint = cfg.constraint();
    const double t_samp = cfg.t_samp_ms * 1e-3;
    const int m = static_cast<int>(std::lround(cfg.t_frame_ms / cfg.t_samp_ms));

    int n_lo = 2, n_hi = m - 2;
    if (!cfg.sweep_param.empty()) {
        n_lo = std::max(2, static_cast<int>(std::ceil(cfg.sweep_from / cfg.t_samp_ms)));
        n_hi = std::min(m - 2, static_cast<int>(std::floor(cfg.sweep_to / cfg.t_samp_ms)));
        if (n_lo % 2 != 0) ++n_lo;
    }
    if (n_lo > n_hi) throw std::invalid_argument("tradeoff: empty sensing-duration grid");

    csv_format(out);
    out << "t_sense_ms,avg_pd,avg_pf,r_total,outage\n";
    double best_t = 0.0, best_r = -1.0;
    for (int n = n_lo; n <= n_hi; n += 2) {
        SystemGeometry geom = SystemGeometry::from_times(t_samp, n * t_samp, cfg.t_frame_ms * 1e-3);
        double eta = solve_threshold(traffic, geom, channel, cfg.target_pd);
        ThroughputReport rep = throughput_components(traffic, geom, channel, constraint, eta);
        double t_ms = n * cfg.t_samp_ms;
        out << t_ms << "," << rep.avg_pd << "," << rep.avg_pf << "," << rep.r_total << ","
            << rep.outage << "\n";
        if (rep.r_total > best_r) {
            best_r = rep.r_total;
            best_t = t_ms;
        }
    }
    out << "# argmax_t_sense_ms," << best_t << "\n";
}

void run_traffic_sweep(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out) {
    (void)opts;
    cfg.validate();
    if (cfg.sweep_param != "alpha" && cfg.sweep_param != "beta")
        throw std::invalid_argument("traffic: sweep_param must be 'alpha' or 'beta'");
    const SystemGeometry geom = cfg.geometry();
    const ChannelModel channel = cfg.channel();
    const SnrConstraint constraint = cfg.constraint();

    csv_format(out);
    out << cfg.sweep_param << ",r_total\n";
    for (int i = 0; i < cfg.sweep_steps; ++i) {
        double x = cfg.sweep_value(i);
        TrafficModel traffic(cfg.sweep_param == "alpha" ? x : cfg.alpha,
                             cfg.sweep_param == "beta" ? x : cfg.beta);
        double eta = solve_threshold(traffic, geom, channel, cfg.target_pd);
        ThroughputReport rep = throughput_components(traffic, geom, channel, constraint, eta);
        out << x << "," << rep.r_total << "\n";
    }
}

void run_outage(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out) {
    (void)opts;
    cfg.validate();
    if (cfg.sweep_param != "t_sense_ms" && cfg.sweep_param != "p_p" &&
        cfg.sweep_param != "gamma_s_db")
        throw std::invalid_argument("outage: sweep_param must be t_sense_ms, p_p or gamma_s_db");

    csv_format(out);
    out << cfg.sweep_param << ",outage\n";
    for (int i = 0; i < cfg.sweep_steps; ++i) {
        double x = cfg.sweep_value(i);
        ExperimentConfig pt = cfg;
        if (pt.sweep_param == "t_sense_ms")
            pt.t_sense_ms = x;
        else if (pt.sweep_param == "p_p")
            pt.p_p = x;
        else
            pt.gamma_s_db = x;
        TrafficModel traffic = pt.traffic();
        SystemGeometry geom = pt.geometry();
        ChannelModel channel = pt.channel();
        SnrConstraint constraint = pt.constraint();
        double eta = solve_threshold(traffic, geom, channel, pt.target_pd);
        ThroughputReport rep = throughput_components(traffic, geom, channel, constraint, eta);
        out << x << "," << rep.outage << "\n";
    }
}

void run_optimize(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out) {
    (void)opts;
    cfg.validate();
    OptimizeResult res =
        optimize_sensing_duration(cfg.traffic(), cfg.channel(), cfg.constraint(),
                                  cfg.t_frame_ms * 1e-3, cfg.t_samp_ms * 1e-3, cfg.target_pd);
    csv_format(out);
    out << "t_sense_ms,eta,avg_pd,avg_pf,r_total,outage\n";
    out << res.t_sense * 1e3 << "," << res.eta << "," << res.report.avg_pd << ","
        << res.report.avg_pf << "," << res.report.r_total << "," << res.report.outage << "\n";
}

bool run_validate(const ExperimentConfig& cfg, const RunOptions& opts, std::ostream& out) {
    cfg.validate();
    const TrafficModel traffic = cfg.traffic();
    const SystemGeometry geom = cfg.geometry();
    const ChannelModel channel = cfg.channel();
    const SnrConstraint constraint = cfg.constraint();

    const double eta = solve_threshold(traffic, geom, channel, cfg.target_pd);
    // the debug perturbation is applied to the simulated detector only, so a nonzero
    // value deliberately breaks the analytic/Monte-Carlo agreement
    const double eta_mc = eta * (1.0 + opts.perturb_eta_pct / 100.0);

    ThroughputReport rep = throughput_components(traffic, geom, channel, constraint, eta);
    McEstimate mc = estimate(traffic, geom, channel, constraint, eta_mc, cfg.mc_frames, cfg.seed,
                             opts.mode, opts.threads);

    struct Row {
        const char* name;
        double analytic;
        double mc_value;
        double se;
    };
    const Row rows[] = {
        {"avg_pd", rep.avg_pd, mc.avg_pd_hat, mc.se_pd},
        {"avg_pf", rep.avg_pf, mc.avg_pf_hat, mc.se_pf},
        {"r_total", rep.r_total, mc.r_hat, mc.se_r},
        {"outage", rep.outage, mc.outage_hat, mc.se_outage},
    };

    csv_format(out);
    out << "quantity,analytic,mc_estimate,std_error,z_score,pass\n";
    bool all_pass = true;
    for (const Row& r : rows) {
        double z = (r.mc_value - r.analytic) / r.se;
        bool pass = std::isfinite(z) && std::fabs(z) <= 3.0;
        all_pass = all_pass && pass;
        out << r.name << "," << r.analytic << "," << r.mc_value << "," << r.se << "," << z << ","
            << (pass ? "true" : "false") << "\n";
    }
    return all_pass;
}

}  // namespace edsense
