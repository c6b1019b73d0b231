// Command-line front end; talks to the library through the C API only.
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "edsense.h"

namespace {

struct ConfigDeleter {
    void operator()(edsense_config* c) const { edsense_config_destroy(c); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-detection spectrum sensing performance under primary traffic "
                 "and Rayleigh fading"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    long mc_frames = 0;
    int threads = 1;
    bool conventional = false;
    double perturb_eta_pct = 0.0;
    bool have_seed = false, have_frames = false;

    const char* commands[] = {"roc", "tradeoff", "traffic", "outage", "optimize", "validate"};
    const char* descs[] = {
        "Detection/false-alarm pair over a threshold sweep",
        "Throughput and outage over the sensing-duration grid",
        "Throughput over a primary arrival/departure rate sweep",
        "Outage over a t_sense_ms, p_p or gamma_s_db sweep",
        "Best sensing duration for the configured target detection probability",
        "Monte Carlo cross-check of the analytic quantities",
    };
    for (size_t i = 0; i < 6; ++i) {
        auto* sub = app.add_subcommand(commands[i], descs[i]);
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--out", out_path, "output CSV path (default stdout)");
        sub->add_option("--seed", seed, "Monte Carlo seed")->each([&](const std::string&) {
            have_seed = true;
        });
        sub->add_option("--mc-frames", mc_frames, "Monte Carlo frame count")
            ->each([&](const std::string&) { have_frames = true; });
        sub->add_option("--mode", mode, "Monte Carlo mode: exact|chain")
            ->check(CLI::IsMember({"exact", "chain"}));
        sub->add_option("--threads", threads, "Monte Carlo worker count");
        if (std::string(commands[i]) == "roc")
            sub->add_flag("--conventional", conventional, "no-traffic baseline curve");
        if (std::string(commands[i]) == "validate")
            sub->add_option("--debug-perturb-eta", perturb_eta_pct,
                            "offset the solved threshold by this percentage");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // fold CLI11's many parse-error codes into the config-error exit code
        return app.exit(e) == 0 ? 0 : 1;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    std::unique_ptr<edsense_config, ConfigDeleter> cfg(edsense_config_create());
    if (!cfg) {
        std::fprintf(stderr, "error: out of memory\n");
        return 2;
    }

    if (!config_path.empty()) {
        if (edsense_config_load(cfg.get(), config_path.c_str()) != EDSENSE_OK) {
            std::fprintf(stderr, "error: %s\n", edsense_error(cfg.get()));
            return 1;
        }
    }
    if (have_seed &&
        edsense_config_set(cfg.get(), "seed", std::to_string(seed).c_str()) != EDSENSE_OK) {
        std::fprintf(stderr, "error: %s\n", edsense_error(cfg.get()));
        return 1;
    }
    if (have_frames &&
        edsense_config_set(cfg.get(), "mc_frames", std::to_string(mc_frames).c_str()) !=
            EDSENSE_OK) {
        std::fprintf(stderr, "error: %s\n", edsense_error(cfg.get()));
        return 1;
    }

    edsense_run_options opts;
    edsense_run_options_init(&opts);
    opts.mode = mode == "chain" ? EDSENSE_MC_CHAIN : EDSENSE_MC_EXACT;
    opts.conventional = conventional ? 1 : 0;
    opts.threads = threads;
    opts.perturb_eta_pct = perturb_eta_pct;

    edsense_status st = edsense_run(cfg.get(), command.c_str(),
                                    &opts, out_path.empty() ? nullptr : out_path.c_str());
    if (st != EDSENSE_OK) std::fprintf(stderr, "error: %s\n", edsense_error(cfg.get()));
    return static_cast<int>(st);
}
