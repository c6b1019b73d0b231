#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sensing.hpp"
#include "specfun.hpp"

using namespace edsense;

namespace {

ChannelModel paper_channel() {
    // primary snr 5 dB, secondary snr 20 dB, unit rates and powers
    double sigma_st = 1.0 / std::pow(10.0, 0.5);
    double sigma_sr = 1.0 / std::pow(10.0, 2.0);
    return ChannelModel(1.0, 1.0, 1.0, sigma_st, sigma_sr, 1.0, 1.0);
}

SystemGeometry paper_geometry() { return SystemGeometry::from_times(0.1e-3, 5e-3, 25e-3); }

}  // namespace

TEST_CASE("channel model: derived SNR and invariants") {
    ChannelModel c = paper_channel();
    CHECK(c.gamma_bar_p() == doctest::Approx(std::pow(10.0, 0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(ChannelModel(0.0, 1, 1, 1, 1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(ChannelModel(1, 1, 1, -1, 1, 1, 1), std::domain_error);
}

TEST_CASE("kernel: trivial endpoints") {
    CHECK(rayleigh_pd_kernel(25, 0.0, 17.0) == 1.0);
    CHECK(rayleigh_pd_kernel(25, 0.0, 0.0) == 1.0);
    CHECK(rayleigh_pd_kernel(25, 50.0, 0.0) ==
          doctest::Approx(regularized_upper_gamma(25.0, 25.0)).epsilon(1e-13));
    CHECK_THROWS_AS(rayleigh_pd_kernel(0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rayleigh_pd_kernel(2, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rayleigh_pd_kernel(2, 1.0, -1.0), std::domain_error);
}

TEST_CASE("kernel: quadrature oracle at the paper operating point") {
    // snr_scale m = c * gamma_bar / 2 where the AWGN kernel is
    // Q_u(sqrt(c*gamma), sqrt(eta))
    double gbar = std::pow(10.0, 0.5);
    int u = 25;
    double eta = 50.0;
    double closed = rayleigh_pd_kernel(u, eta, u * gbar);
    double quad = oracles::averaged_marcum(u, eta, 2.0 * u, gbar);
    CHECK(std::fabs(closed - quad) < 1e-8);
}

TEST_CASE("kernel: quadrature oracle over a randomized grid") {
    oracles::Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        int u = rng.uniform_int(1, 50);
        double eta = rng.uniform(0.5, 6.0 * u);
        double gbar = rng.uniform(0.05, 10.0);
        double c = rng.uniform(0.5, 2.0 * u);  // effective sample count
        double closed = rayleigh_pd_kernel(u, eta, 0.5 * c * gbar);
        double quad = oracles::averaged_marcum(u, eta, c, gbar);
        CHECK(std::fabs(closed - quad) < 1e-8);
    }
}

TEST_CASE("kernel: monotone in eta and in snr scale") {
    oracles::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        int u = rng.uniform_int(1, 40);
        double eta = rng.uniform(0.1, 5.0 * u);
        double m = rng.uniform(0.01, 100.0);
        double base = rayleigh_pd_kernel(u, eta, m);
        CHECK(base >= 0.0);
        CHECK(base <= 1.0);
        CHECK(rayleigh_pd_kernel(u, eta * 1.1, m) <= base + 1e-13);
        CHECK(rayleigh_pd_kernel(u, eta, m * 1.1) >= base - 1e-13);
    }
}

TEST_CASE("conditional probabilities: exact degenerate reductions") {
    int u = 25;
    int n = 2 * u;
    double eta = 50.0;
    double gbar = std::pow(10.0, 0.5);
    CHECK(pd_h12(u, 0, eta, gbar) == pd_h11(u, eta, gbar));
    CHECK(pf_h02(u, 0, eta, gbar) == pf_h01(u, eta));
    CHECK(pf_h02(u, n, eta, gbar) == pd_h11(u, eta, gbar));
    CHECK(pd_h12(u, n, eta, gbar) ==
          doctest::Approx(regularized_upper_gamma(u, eta / 2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(pd_h12(u, -1, eta, gbar), std::out_of_range);
    CHECK_THROWS_AS(pd_h12(u, n + 1, eta, gbar), std::out_of_range);
    CHECK_THROWS_AS(pf_h02(u, n + 1, eta, gbar), std::out_of_range);
}

TEST_CASE("pd_h12 decreasing in a, pf_h02 increasing in d") {
    int u = 25;
    double eta = 45.0;
    double gbar = 2.0;
    for (int k = 1; k <= 2 * u; ++k) {
        CHECK(pd_h12(u, k, eta, gbar) <= pd_h12(u, k - 1, eta, gbar) + 1e-14);
        CHECK(pf_h02(u, k, eta, gbar) >= pf_h02(u, k - 1, eta, gbar) - 1e-14);
    }
}

TEST_CASE("pf_h01 anchors") {
    CHECK(pf_h01(1, 5.0) == doctest::Approx(std::exp(-2.5)).epsilon(1e-13));
    CHECK(pf_h01(25, 0.0) == 1.0);
    CHECK(pf_h01(25, 50.0) == doctest::Approx(0.47339846855634936).epsilon(1e-12));
    CHECK_THROWS_AS(pf_h01(25, -1.0), std::domain_error);
}

TEST_CASE("averages: eta = 0 gives certainty, no-traffic limit recovers conventional") {
    auto geom = paper_geometry();
    auto channel = paper_channel();
    TrafficModel traffic(1.0, 2.0);
    CHECK(average_pd(traffic, geom, channel, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(average_pf(traffic, geom, channel, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    TrafficModel tiny(1e-9, 1e-9);
    double eta = 50.0;
    CHECK(average_pd(tiny, geom, channel, eta) ==
          doctest::Approx(pd_h11(geom.u, eta, channel.gamma_bar_p())).epsilon(1e-7));
    CHECK(average_pf(tiny, geom, channel, eta) ==
          doctest::Approx(pf_h01(geom.u, eta)).epsilon(1e-7));
}

TEST_CASE("averages: convex combinations of their conditionals") {
    auto geom = paper_geometry();
    auto channel = paper_channel();
    TrafficModel traffic(3.0, 5.0);
    double eta = 55.0;
    SensingResult sr = sensing_result(traffic, geom, channel, eta);
    double lo = sr.pd_h11, hi = sr.pd_h11;
    for (double v : sr.pd_h12) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(sr.avg_pd >= lo - 1e-14);
    CHECK(sr.avg_pd <= hi + 1e-14);
    CHECK(sr.avg_pd >= sr.avg_pf);  // ROC dominance at positive SNR
}

TEST_CASE("averages: strictly decreasing in eta") {
    auto geom = paper_geometry();
    auto channel = paper_channel();
    TrafficModel traffic(1.0, 1.0);
    double prev_pd = 2.0, prev_pf = 2.0;
    for (int i = 0; i < 50; ++i) {
        double eta = 30.0 + i * 2.0;
        double pd = average_pd(traffic, geom, channel, eta);
        double pf = average_pf(traffic, geom, channel, eta);
        CHECK(pd < prev_pd);
        CHECK(pf < prev_pf);
        prev_pd = pd;
        prev_pf = pf;
    }
}

TEST_CASE("threshold solver hits the target and round-trips") {
    auto geom = paper_geometry();
    auto channel = paper_channel();
    TrafficModel traffic(1.0, 1.0);
    double eta = solve_threshold(traffic, geom, channel, 0.9);
    CHECK(std::fabs(average_pd(traffic, geom, channel, eta) - 0.9) <= 1e-9);

    double eta_high = solve_threshold(traffic, geom, channel, 0.999);
    CHECK(eta_high < eta);  // target closer to 1 pushes the threshold down

    CHECK_THROWS_AS(solve_threshold(traffic, geom, channel, 0.0), std::domain_error);
    CHECK_THROWS_AS(solve_threshold(traffic, geom, channel, 1.0), std::domain_error);
}

TEST_CASE("higher traffic raises the false-alarm cost of a fixed detection target") {
    auto geom = paper_geometry();
    auto channel = paper_channel();
    TrafficModel low(0.5, 0.5), high(5.0, 5.0);
    double eta_low = solve_threshold(low, geom, channel, 0.9);
    double eta_high = solve_threshold(high, geom, channel, 0.9);
    CHECK(eta_low != eta_high);
    CHECK(average_pf(high, geom, channel, eta_high) > average_pf(low, geom, channel, eta_low));
}
