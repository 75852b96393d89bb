#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entdyn/amplitude.hpp"
#include "entdyn/error.hpp"
#include "oracles.hpp"

using namespace entdyn;
using amplitude::Regime;
using amplitude::VolterraScheme;
using spectral::ReservoirSpectrum;

namespace {

double max_dev_from_closed(const ReservoirSpectrum& s, const std::vector<amplitude::AmplitudePair>& series) {
    double e = 0.0;
    for (const auto& p : series) e = std::max(e, std::abs(p.c0 - amplitude::c0_closed_form(s, p.t)));
    return e;
}

} // namespace

TEST_CASE("regime classification") {
    CHECK(amplitude::classify_regime(ReservoirSpectrum(1.0, 0.1)) == Regime::NonMarkovian);
    CHECK(amplitude::classify_regime(ReservoirSpectrum(1.0, 5.0)) == Regime::Markovian);
    CHECK(amplitude::classify_regime(ReservoirSpectrum(1.0, 2.0)) == Regime::Critical);
    CHECK(amplitude::classify_regime(ReservoirSpectrum(1.0, 2.0 + 1e-11)) == Regime::Critical);
    CHECK(amplitude::classify_regime(ReservoirSpectrum(1.0, 2.0 + 1e-6)) == Regime::Markovian);
}

TEST_CASE("closed form starts at one with zero slope") {
    for (double g : {0.05, 0.1, 2.0, 5.0}) {
        const ReservoirSpectrum s(1.0, g);
        CHECK(amplitude::c0_closed_form(s, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
        const double h = 1e-5;
        const double slope = (amplitude::c0_closed_form(s, h) - amplitude::c0_closed_form(s, 0.0)) / h;
        CHECK(std::abs(slope) < g * h); // forward difference error is gamma0 gamma h / 4
    }
    CHECK_THROWS_AS(amplitude::c0_closed_form(ReservoirSpectrum(1.0, 0.1), -1e-3), InvalidArgument);
}

TEST_CASE("first zero of C0 at gamma = 0.1 gamma0") {
    const ReservoirSpectrum s(1.0, 0.1);
    auto c0 = [&](double t) { return amplitude::c0_closed_form(s, t); };
    const double root = testing::bisect_root(c0, 5.0, 10.0);
    // Reference from an arbitrary-precision root of tan(Gt/2) = -G/g.
    CHECK(root == doctest::Approx(8.242034311692072).epsilon(1e-10));
    CHECK(std::abs(c0(8.242034311692072)) < 1e-9);

    // Zeros repeat every 2 pi / Gamma.
    const double big = std::sqrt(0.1 * 1.9);
    const double period = 2.0 * std::numbers::pi / big;
    const double second = testing::bisect_root(c0, root + 0.5 * period, root + 1.5 * period);
    CHECK(second - root == doctest::Approx(period).epsilon(1e-9));
}

TEST_CASE("non-Markovian envelope bound") {
    const ReservoirSpectrum s(1.0, 0.1);
    const double big = std::sqrt(0.1 * 1.9);
    const double amp = std::sqrt(1.0 + 0.01 / (big * big));
    for (double t = 0.0; t < 100.0; t += 0.01)
        REQUIRE(std::abs(amplitude::c0_closed_form(s, t)) <= std::exp(-0.05 * t) * amp + 1e-15);
}

TEST_CASE("Markovian branch is positive and strictly decreasing") {
    const ReservoirSpectrum s(1.0, 5.0);
    double prev = amplitude::c0_closed_form(s, 0.0);
    for (double t = 1e-3; t <= 50.0; t += 1e-3) {
        const double v = amplitude::c0_closed_form(s, t);
        REQUIRE(v > 0.0);
        REQUIRE(v < prev);
        prev = v;
    }
}

TEST_CASE("critical branch is the limit of both neighbours") {
    const ReservoirSpectrum crit(1.0, 2.0);
    for (double g : {2.0 - 1e-4, 2.0 + 1e-4}) {
        const ReservoirSpectrum s(1.0, g);
        double dev = 0.0;
        for (double t = 0.0; t <= 20.0; t += 0.01)
            dev = std::max(dev, std::abs(amplitude::c0_closed_form(s, t) - std::exp(-0.5 * 2.0 * t) * (1.0 + t)));
        CHECK(dev < 1e-3);
    }
    CHECK(amplitude::c0_closed_form(crit, 3.0) == doctest::Approx(std::exp(-3.0) * 4.0).epsilon(1e-14));
}

TEST_CASE("AmplitudePair normalisation") {
    for (double c : {-1.0, -0.3, 0.0, 0.7, 1.0, 1.0 + 1e-17}) {
        const auto p = amplitude::AmplitudePair::from_c0(0.0, c);
        CHECK(std::abs(p.c0 * p.c0 + p.c_tilde * p.c_tilde - 1.0) < 1e-12);
        CHECK(p.c_tilde >= 0.0);
    }
}

TEST_CASE("Volterra recursion matches the closed form") {
    for (auto scheme : {VolterraScheme::ExponentialRecursion, VolterraScheme::TrapezoidQuadrature}) {
        const ReservoirSpectrum nm(1.0, 0.1);
        const auto v = amplitude::c0_volterra(nm, 15.0, 1e-3, scheme);
        CHECK(v.size() == 15001);
        CHECK(v.front().c0 == 1.0);
        CHECK(v.front().c_tilde == 0.0);
        CHECK(max_dev_from_closed(nm, v) < 1e-5);

        const ReservoirSpectrum mk(1.0, 5.0);
        CHECK(max_dev_from_closed(mk, amplitude::c0_volterra(mk, 5.0, 1e-3, scheme)) < 1e-5);
    }
}

TEST_CASE("Volterra schemes are second order") {
    const ReservoirSpectrum s(1.0, 0.1);
    for (auto scheme : {VolterraScheme::ExponentialRecursion, VolterraScheme::TrapezoidQuadrature}) {
        const double coarse = max_dev_from_closed(s, amplitude::c0_volterra(s, 15.0, 4e-3, scheme));
        const double fine = max_dev_from_closed(s, amplitude::c0_volterra(s, 15.0, 2e-3, scheme));
        CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
    }
}

TEST_CASE("Volterra rejects bad steps") {
    const ReservoirSpectrum s(1.0, 0.1);
    CHECK_THROWS_AS(amplitude::c0_volterra(s, 15.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(amplitude::c0_volterra(s, 15.0, -1e-3), InvalidArgument);
    CHECK_THROWS_AS(amplitude::c0_volterra(s, 1e-4, 1e-3), InvalidArgument);
}

TEST_CASE("discrete-mode bath reproduces the closed form") {
    const ReservoirSpectrum s(1.0, 0.1);
    const auto run = amplitude::c0_discrete_modes(s, 4000, 20.0, 15.0, 1e-3);
    CHECK(run.series.front().c0 == 1.0);
    CHECK(run.series.front().c_tilde == 0.0);
    CHECK(max_dev_from_closed(s, run.series) < 1e-2);
    CHECK(run.max_norm_error < 1e-9);
    CHECK(std::abs(run.final_state.norm() - 1.0) < 1e-9);
}

TEST_CASE("discrete-mode bath converges as the window widens") {
    // The error is set by the Lorentzian tails cut off outside the window.
    const ReservoirSpectrum s(1.0, 0.1);
    const double narrow = max_dev_from_closed(s, amplitude::c0_discrete_modes(s, 1000, 10.0, 10.0, 1e-2).series);
    const double wide = max_dev_from_closed(s, amplitude::c0_discrete_modes(s, 2000, 20.0, 10.0, 1e-2).series);
    CHECK(wide < narrow / 4.0);
}

TEST_CASE("discrete-mode bath construction") {
    const ReservoirSpectrum s(1.0, 0.1);
    const auto bath = amplitude::make_discrete_bath(s, 200, 10.0);
    CHECK(bath.ck.size() == 200);
    CHECK(bath.norm() == 1.0);
    // Sum of g_k^2 is a midpoint rule for the integral of J over the window.
    double g2 = 0.0;
    for (double g : bath.couplings) g2 += g * g;
    CHECK(g2 == doctest::Approx(0.05 * 2.0 / std::numbers::pi * std::atan(100.0)).epsilon(1e-3));
    CHECK_THROWS_AS(amplitude::make_discrete_bath(s, 99, 10.0), InvalidArgument);
    CHECK_THROWS_AS(amplitude::make_discrete_bath(s, 200, 5.0), InvalidArgument);
    CHECK_THROWS_AS(amplitude::make_discrete_bath(s, 200, 150.0), InvalidArgument);
}

TEST_CASE("discrete-mode bath rejects windows past the recurrence time") {
    const ReservoirSpectrum s(1.0, 0.1);
    // d_omega = 1 -> recurrence 2 pi < 15.
    CHECK_THROWS_AS(amplitude::c0_discrete_modes(s, 100, 50.0, 15.0, 1e-2), InvalidArgument);
}
