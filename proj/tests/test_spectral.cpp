#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entdyn/error.hpp"
#include "entdyn/spectral.hpp"
#include "oracles.hpp"

using namespace entdyn;
using spectral::ReservoirSpectrum;

namespace {
const ReservoirSpectrum kSpec(1.0, 0.1, 100.0);
}

TEST_CASE("spectral density peak and half width") {
    CHECK(spectral::spectral_density(kSpec, 100.0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(spectral::spectral_density(kSpec, 100.1) == doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("spectral density is even about omega0") {
    for (double x : {0.0, 0.01, 0.3, 2.0, 40.0})
        CHECK(spectral::spectral_density(kSpec, 100.0 + x) == spectral::spectral_density(kSpec, 100.0 - x));
}

TEST_CASE("spectral density integrates to gamma0 gamma / 2") {
    // Wide finite window; the neglected tails weigh 2 gamma / (pi W) relative.
    const double w = 1e4;
    const double integral = testing::adaptive_simpson(
        [](double om) { return spectral::spectral_density(kSpec, om); }, 100.0 - w, 100.0 + w, 1e-12);
    CHECK(integral == doctest::Approx(0.05).epsilon(1e-4));
}

TEST_CASE("memory kernel closed form") {
    CHECK(spectral::memory_kernel(kSpec, 0.0).real() == 0.05);
    CHECK(spectral::memory_kernel(kSpec, 0.0).imag() == 0.0);
    CHECK(spectral::memory_kernel(kSpec, 10.0).real() == doctest::Approx(0.0183940).epsilon(1e-5));
    CHECK(std::abs(spectral::memory_kernel(kSpec, 1e4)) < 1e-300);
    CHECK_THROWS_AS(spectral::memory_kernel(kSpec, -1.0), InvalidArgument);
}

TEST_CASE("memory kernel decays monotonically") {
    double prev = std::abs(spectral::memory_kernel(kSpec, 0.0));
    for (double tau = 0.5; tau < 200.0; tau += 0.5) {
        const double v = std::abs(spectral::memory_kernel(kSpec, tau));
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("memory kernel quadrature examples") {
    const auto k0 = spectral::memory_kernel_quadrature(kSpec, 0.0, 50.0, 1'000'000);
    CHECK(std::abs(k0.real() - 0.05) < 1e-4);
    const auto k10 = spectral::memory_kernel_quadrature(kSpec, 10.0, 50.0, 1'000'000);
    CHECK(std::abs(k10.real() - 0.0183940) < 1e-4);
    CHECK(std::abs(k0.imag()) < 1e-12);
    CHECK(std::abs(k10.imag()) < 1e-12);
}

TEST_CASE("memory kernel quadrature agrees with the closed form") {
    // window = 500 gamma. At tau = 0 the truncated tails carry 2 / (500 pi) of
    // the weight, so the relative bound is checked for tau gamma >= 0.1.
    for (double x : {0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
        const double tau = x / kSpec.gamma();
        const auto quad = spectral::memory_kernel_quadrature(kSpec, tau, 500.0 * kSpec.gamma(), 1'000'000);
        const auto exact = spectral::memory_kernel(kSpec, tau);
        CAPTURE(x);
        CHECK(std::abs(quad - exact) / std::abs(exact) < 1e-3);
    }
}

TEST_CASE("memory kernel quadrature rejects bad parameters") {
    CHECK_THROWS_AS(spectral::memory_kernel_quadrature(kSpec, 1.0, 0.0, 10000), InvalidArgument);
    CHECK_THROWS_AS(spectral::memory_kernel_quadrature(kSpec, 1.0, -5.0, 10000), InvalidArgument);
    CHECK_THROWS_AS(spectral::memory_kernel_quadrature(kSpec, 1.0, 5.0, 999), InvalidArgument);
    CHECK_THROWS_AS(spectral::memory_kernel_quadrature(kSpec, 1.0, 5.0, 0), InvalidArgument);
}

TEST_CASE("reservoir spectrum validates its rates") {
    CHECK_THROWS_AS(ReservoirSpectrum(0.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(ReservoirSpectrum(1.0, -0.1), InvalidArgument);
    CHECK_THROWS_AS(ReservoirSpectrum(1.0, NAN), InvalidArgument);
    CHECK(ReservoirSpectrum(2.0, 0.1).omega0() == 200.0);
    const auto s = ReservoirSpectrum::from_ratio(0.05, 2.0);
    CHECK(s.gamma0() == 2.0);
    CHECK(s.gamma() == doctest::Approx(0.1));
}
