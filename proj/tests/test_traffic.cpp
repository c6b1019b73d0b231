#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "traffic.hpp"

using namespace edsense;

TEST_CASE("traffic model invariants") {
    TrafficModel t(1.0, 2.0);
    CHECK(t.stationary_busy() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(t.stationary_busy() + t.stationary_idle() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(TrafficModel(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(TrafficModel(1.0, -2.0), std::domain_error);
}

TEST_CASE("geometry from paper timing") {
    auto g = SystemGeometry::from_times(0.1e-3, 5e-3, 25e-3);
    CHECK(g.n_sense == 50);
    CHECK(g.m_frame == 250);
    CHECK(g.u == 25);
    CHECK_THROWS_AS(SystemGeometry::from_times(0.1e-3, 25e-3, 5e-3), std::domain_error);
    // odd N
    CHECK_THROWS_AS(SystemGeometry::from_times(1e-3, 5e-3, 25e-3), std::domain_error);
}

TEST_CASE("transition matrix: identity at t=0, stationary limit, frozen point") {
    TrafficModel t(1.0, 2.0);
    auto tm0 = transition_matrix(t, 0.0);
    CHECK(tm0.p_ii == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tm0.p_bb == doctest::Approx(1.0).epsilon(1e-15));

    auto tmi = transition_matrix(t, 100.0);
    CHECK(tmi.p_ii == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(tmi.p_bi == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    auto tm = transition_matrix(t, 0.1);
    CHECK(tm.p_ii == doctest::Approx(0.91360607356057262).epsilon(1e-14));
    CHECK(tm.p_ib == doctest::Approx(0.086393926439427378).epsilon(1e-14));
    CHECK(tm.p_bi == doctest::Approx(0.17278785287885476).epsilon(1e-14));
    CHECK(tm.p_bb == doctest::Approx(0.82721214712114524).epsilon(1e-14));

    CHECK_THROWS_AS(transition_matrix(t, -1.0), std::domain_error);
}

TEST_CASE("transition matrix: row-stochastic and Chapman-Kolmogorov") {
    oracles::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        TrafficModel t(rng.uniform(1e-3, 50.0), rng.uniform(1e-3, 50.0));
        double t1 = rng.uniform(0.0, 2.0), t2 = rng.uniform(0.0, 2.0);
        auto m1 = transition_matrix(t, t1);
        auto m2 = transition_matrix(t, t2);
        auto m12 = transition_matrix(t, t1 + t2);
        CHECK(m1.p_ii + m1.p_ib == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m1.p_bi + m1.p_bb == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m1.p_ii * m2.p_ii + m1.p_ib * m2.p_bi == doctest::Approx(m12.p_ii).epsilon(1e-12));
        CHECK(m1.p_ii * m2.p_ib + m1.p_ib * m2.p_bb == doctest::Approx(m12.p_ib).epsilon(1e-12));
        CHECK(m1.p_bi * m2.p_ii + m1.p_bb * m2.p_bi == doctest::Approx(m12.p_bi).epsilon(1e-12));
        CHECK(m1.p_bi * m2.p_ib + m1.p_bb * m2.p_bb == doctest::Approx(m12.p_bb).epsilon(1e-12));
    }
}

TEST_CASE("hypothesis probabilities match brute-force enumeration at toy scale") {
    auto geom = SystemGeometry::from_times(0.1e-3, 0.2e-3, 0.6e-3);  // N=2, M=6
    TrafficModel t(1.0, 2.0);
    auto hp = hypothesis_probabilities(t, geom);
    auto en = oracles::enumerate_hypotheses(t, geom);
    CHECK(hp.p_h11 == doctest::Approx(en.p_h11).epsilon(1e-12));
    CHECK(hp.p_h12 == doctest::Approx(en.p_h12).epsilon(1e-12));
    CHECK(hp.p_h01 == doctest::Approx(en.p_h01).epsilon(1e-12));
    CHECK(hp.p_h02 == doctest::Approx(en.p_h02).epsilon(1e-12));
}

TEST_CASE("hypothesis probabilities vs enumeration over randomized small frames") {
    oracles::Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        double t_samp = rng.uniform(1e-5, 5e-3);
        int m = rng.uniform_int(4, 12);
        int n = 2 * rng.uniform_int(1, (m - 1) / 2);
        auto geom = SystemGeometry::from_times(t_samp, n * t_samp, m * t_samp);
        TrafficModel t(rng.uniform(0.05, 80.0), rng.uniform(0.05, 80.0));
        auto hp = hypothesis_probabilities(t, geom);
        auto en = oracles::enumerate_hypotheses(t, geom);
        CHECK(std::fabs(hp.p_h11 - en.p_h11) < 1e-12);
        CHECK(std::fabs(hp.p_h12 - en.p_h12) < 1e-12);
        CHECK(std::fabs(hp.p_h01 - en.p_h01) < 1e-12);
        CHECK(std::fabs(hp.p_h02 - en.p_h02) < 1e-12);
        CHECK(std::fabs(residual_mass(hp) - (1.0 - en.at_most_one)) < 1e-12);
    }
}

TEST_CASE("arrival-term partition: single-arrival mass splits into H12 and H01 parts") {
    auto geom = SystemGeometry::from_times(0.1e-3, 5e-3, 25e-3);
    TrafficModel t(1.0, 2.0);
    auto hp = hypothesis_probabilities(t, geom);
    double total_arrival = 0.0;
    for (double term : hp.arrival_terms) total_arrival += term;
    double h01_arrivals = hp.p_h01 - hp.no_arrival;
    CHECK(hp.p_h12 + h01_arrivals == doctest::Approx(total_arrival).epsilon(1e-14));
}

TEST_CASE("no-traffic limit pushes all mass to H01") {
    auto geom = SystemGeometry::from_times(0.1e-3, 5e-3, 25e-3);
    TrafficModel t(1e-9, 2.0);
    auto hp = hypothesis_probabilities(t, geom);
    CHECK(hp.p_h01 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(hp.p_h11 < 1e-8);
    CHECK(hp.p_h12 < 1e-8);
    CHECK(hp.p_h02 < 1e-8);
}

TEST_CASE("residual mass grows with traffic intensity") {
    auto geom = SystemGeometry::from_times(0.1e-3, 5e-3, 25e-3);
    double low = residual_mass(hypothesis_probabilities(TrafficModel(1.0, 2.0), geom));
    double tiny = residual_mass(hypothesis_probabilities(TrafficModel(1e-9, 1e-9), geom));
    double high = residual_mass(hypothesis_probabilities(TrafficModel(100.0, 100.0), geom));
    CHECK(tiny == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(low >= 0.0);
    CHECK(high > low);
}

TEST_CASE("validity ratio diagnostic") {
    auto geom = SystemGeometry::from_times(0.1e-3, 5e-3, 25e-3);
    CHECK(geom.validity_ratio(TrafficModel(1.0, 2.0)) == doctest::Approx(0.05).epsilon(1e-12));
}
