#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"

#include "qgw/errors.hpp"
#include "qgw/evolution.hpp"
#include "qgw/graph.hpp"
#include "qgw/metrics.hpp"
#include "qgw/pair.hpp"
#include "qgw/spectral.hpp"

using namespace qgw;

namespace {

ProbabilitySeries constant_series(double value, std::size_t steps) {
    return ProbabilitySeries(TimeGrid(0.0, 0.25, steps),
                             std::vector<double>(steps, value));
}

}  // namespace

TEST_CASE("log_mean_rate of a constant series is its log") {
    CHECK(log_mean_rate(constant_series(0.5, 101)) ==
          doctest::Approx(std::log(0.5)).epsilon(1e-14));
    CHECK(log_mean_rate(constant_series(1.0, 101)) == 0.0);
}

TEST_CASE("log_mean_rate of an exponential decay is the midpoint log") {
    const double k = std::log(2.0);
    const TimeGrid grid = TimeGrid::from_duration(2.0, 1e-3);
    std::vector<double> values(grid.steps());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = std::exp(-k * grid.time(i));
    }
    const ProbabilitySeries series(grid, std::move(values));
    // ln P(t) = -k t is linear, so the trapezoid rule is exact: mean = -k T/2.
    CHECK(log_mean_rate(series) == doctest::Approx(-k).epsilon(1e-6));
    CHECK(half_passage_time(series) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("log floor kicks in on zero samples and is reported") {
    ProbabilitySeries series(TimeGrid(0.0, 1.0, 4), {1.0, 0.0, 0.0, 1.0});
    const LogMeanRate rate = log_mean_rate_info(series);
    CHECK(rate.floored_samples == 2);
    CHECK(rate.lambda >= std::log(kLogFloor));
    CHECK(rate.lambda < 0.0);
}

TEST_CASE("half_passage_time") {
    CHECK(half_passage_time(constant_series(0.5, 200)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(half_passage_time(constant_series(1.0, 200)) ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("log_mean_rate is monotone under pointwise domination") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const TimeGrid grid(0.0, 0.5, 64);
        std::vector<double> low(64);
        std::vector<double> high(64);
        for (std::size_t i = 0; i < 64; ++i) {
            low[i] = dist(rng);
            high[i] = low[i] + (1.0 - low[i]) * dist(rng);
        }
        CHECK(log_mean_rate(ProbabilitySeries(grid, low)) <=
              log_mean_rate(ProbabilitySeries(grid, high)) + 1e-15);
    }
}

TEST_CASE("first_peak_time finds the sin^4 maximum") {
    const TimeGrid grid = TimeGrid::from_duration(400.0, 0.25);
    std::vector<double> values(grid.steps());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = std::pow(std::sin(0.01 * grid.time(i)), 4);
    }
    const auto peak =
        first_peak_time(ProbabilitySeries(grid, std::move(values)), 0.99);
    REQUIRE(peak.has_value());
    const double expected = std::numbers::pi / 0.02;
    CHECK(std::abs(*peak - expected) <= grid.dt());
}

TEST_CASE("first_peak_time on flat or rising series is absent") {
    CHECK(!first_peak_time(constant_series(0.7, 50), 0.5).has_value());

    const TimeGrid grid(0.0, 1.0, 10);
    std::vector<double> rising(10);
    for (std::size_t i = 0; i < 10; ++i) {
        rising[i] = static_cast<double>(i) / 10.0;
    }
    CHECK(!first_peak_time(ProbabilitySeries(grid, rising), 0.1).has_value());

    CHECK_THROWS_AS(first_peak_time(constant_series(0.5, 10), 0.0),
                    ValidationError);
    CHECK_THROWS_AS(first_peak_time(constant_series(0.5, 10), 1.5),
                    ValidationError);
}

TEST_CASE("adding the chord delays the first high transfer peak") {
    // First 0->2 peaks clearing 0.8 move strictly later as the chord coupling
    // grows (0.01 -> 0.05 -> 0.1); around 0.9 the first lobe of the weakest
    // chord tops out just below threshold and the ordering is lost.
    const TimeGrid grid = TimeGrid::from_duration(1000.0, 0.5);
    double previous = -1.0;
    for (double c : {0.01, 0.05, 0.1}) {
        const auto dec =
            decompose(build_hamiltonian(builtin_braess4(0.01, 0.01, c, 0.0)));
        const auto peak = first_peak_time(probability_series(dec, 0, 2, grid), 0.8);
        REQUIRE(peak.has_value());
        CHECK(*peak > previous);
        previous = *peak;
    }
}

TEST_CASE("grid refinement moves lambda by less than 1%") {
    const auto dec = decompose(build_hamiltonian(
        builtin_braess10(0.1, 0.2, 0.25, 0.3, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5)));
    const PairState pair0 = initial_pair(10, 0, 1, Statistics::Fermion);
    const SiteSubset inner = SiteSubset::range(0, 7);

    const double coarse = log_mean_rate(
        p_perp_series(dec, pair0, inner, TimeGrid::from_duration(2000.0, 0.2)));
    const double fine = log_mean_rate(
        p_perp_series(dec, pair0, inner, TimeGrid::from_duration(2000.0, 0.1)));
    CHECK(std::abs(coarse - fine) <= 0.01 * std::abs(fine));
}

TEST_CASE("rescaling energies and times leaves the sampled physics invariant") {
    // Scaling H by gamma and every grid time by 1/gamma reproduces the same
    // samples, and the windowed log-mean is a time average, so lambda and tau
    // come out numerically unchanged as well.
    const double gamma = 2.5;
    const GraphSpec base =
        builtin_braess10(0.1, 0.2, 0.25, 0.3, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5);
    GraphSpec scaled = base;
    for (auto& [name, value] : scaled.parameters) {
        value *= gamma;
    }
    for (Site& site : scaled.sites) {
        site.potential *= gamma;
    }

    const auto dec = decompose(build_hamiltonian(base));
    const auto dec_scaled = decompose(build_hamiltonian(scaled));
    const PairState pair0 = initial_pair(10, 0, 1, Statistics::Boson);
    const SiteSubset inner = SiteSubset::range(0, 7);

    const TimeGrid grid = TimeGrid::from_duration(500.0, 0.5);
    const TimeGrid grid_scaled(0.0, grid.dt() / gamma, grid.steps());

    const ProbabilitySeries p = p_perp_series(dec, pair0, inner, grid);
    const ProbabilitySeries p_scaled =
        p_perp_series(dec_scaled, pair0, inner, grid_scaled);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(std::abs(p.value(i) - p_scaled.value(i)) <= 1e-9);
    }

    const double lambda = log_mean_rate(p);
    const double lambda_scaled = log_mean_rate(p_scaled);
    CHECK(lambda_scaled == doctest::Approx(lambda).epsilon(1e-9));
    CHECK(half_passage_time(p_scaled) ==
          doctest::Approx(half_passage_time(p)).epsilon(1e-9));
}
