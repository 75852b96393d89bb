#include "entdyn/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entdyn/error.hpp"
#include "entdyn/grid.hpp"

namespace entdyn::amplitude {

namespace {

constexpr double kCriticalTol = 1e-9;
constexpr double kInstabilityBound = 1.0 + 1e-6;

void check_bounded(double c0, double t) {
    if (!std::isfinite(c0) || std::abs(c0) > kInstabilityBound)
        throw NumericalError("amplitude solver unstable: |C0| = " + std::to_string(std::abs(c0)) +
                             " at t = " + std::to_string(t) + "; reduce dt");
}

std::vector<AmplitudePair> volterra_recursion(const ReservoirSpectrum& s, std::size_t n, double h) {
    // y = (C0, I), dy/dt = A y with A = [[0, -1], [k, -gamma]].
    const double k = 0.5 * s.gamma0() * s.gamma();
    const double g = s.gamma();
    // Trapezoidal step: (1 - h A / 2) y' = (1 + h A / 2) y, solved once for the 2x2 propagator.
    const double m00 = 1.0, m01 = 0.5 * h, m10 = -0.5 * h * k, m11 = 1.0 + 0.5 * h * g;
    const double r00 = 1.0, r01 = -0.5 * h, r10 = 0.5 * h * k, r11 = 1.0 - 0.5 * h * g;
    const double det = m00 * m11 - m01 * m10;
    const double i00 = m11 / det, i01 = -m01 / det, i10 = -m10 / det, i11 = m00 / det;
    const double p00 = i00 * r00 + i01 * r10, p01 = i00 * r01 + i01 * r11;
    const double p10 = i10 * r00 + i11 * r10, p11 = i10 * r01 + i11 * r11;

    std::vector<AmplitudePair> out;
    out.reserve(n + 1);
    out.push_back({0.0, 1.0, 0.0});
    double c = 1.0, mem = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double c_next = p00 * c + p01 * mem;
        mem = p10 * c + p11 * mem;
        c = c_next;
        const double t = static_cast<double>(i) * h;
        check_bounded(c, t);
        out.push_back(AmplitudePair::from_c0(t, c));
    }
    return out;
}

std::vector<AmplitudePair> volterra_trapezoid(const ReservoirSpectrum& s, std::size_t n, double h) {
    std::vector<std::complex<double>> kernel(n + 1);
    for (std::size_t j = 0; j <= n; ++j) kernel[j] = spectral::memory_kernel(s, static_cast<double>(j) * h);

    std::vector<std::complex<double>> c(n + 1);
    c[0] = 1.0;
    std::complex<double> mem_prev = 0.0;
    const std::complex<double> denom = 1.0 + 0.25 * h * h * kernel[0];

    std::vector<AmplitudePair> out;
    out.reserve(n + 1);
    out.push_back({0.0, 1.0, 0.0});
    for (std::size_t m = 1; m <= n; ++m) {
        // Known part of the memory integral at t_m; the C0(t_m) endpoint term is implicit.
        std::complex<double> known = 0.5 * kernel[m] * c[0];
        for (std::size_t j = 1; j < m; ++j) known += kernel[m - j] * c[j];
        known *= h;
        c[m] = (c[m - 1] - 0.5 * h * (mem_prev + known)) / denom;
        mem_prev = known + 0.5 * h * kernel[0] * c[m];
        const double t = static_cast<double>(m) * h;
        check_bounded(std::abs(c[m]), t);
        out.push_back(AmplitudePair::from_c0(t, c[m].real()));
    }
    return out;
}

} // namespace

AmplitudePair AmplitudePair::from_c0(double t, double c0) noexcept {
    return {t, c0, std::sqrt(std::max(0.0, 1.0 - c0 * c0))};
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
    case Regime::NonMarkovian: return "NonMarkovian";
    case Regime::Markovian: return "Markovian";
    case Regime::Critical: return "Critical";
    }
    return "?";
}

Regime classify_regime(const ReservoirSpectrum& s) noexcept {
    const double gap = 2.0 * s.gamma0() - s.gamma(); // 2 * (gamma0 - gamma / 2)
    const double tol = kCriticalTol * s.gamma0();
    if (gap > tol) return Regime::NonMarkovian;
    if (gap < -tol) return Regime::Markovian;
    return Regime::Critical;
}

double c0_closed_form(const ReservoirSpectrum& s, double t) {
    if (t < 0.0 || std::isnan(t)) throw InvalidArgument("c0_closed_form: t must be >= 0");
    const double g = s.gamma();
    const double g0 = s.gamma0();
    switch (classify_regime(s)) {
    case Regime::NonMarkovian: {
        const double big = std::sqrt(g * (2.0 * g0 - g));
        const double x = 0.5 * big * t;
        return std::exp(-0.5 * g * t) * (std::cos(x) + (g / big) * std::sin(x));
    }
    case Regime::Markovian: {
        // cosh/sinh continuation written as two decaying exponentials,
        // factored so that t = 0 gives exactly 1.
        const double big = std::sqrt(g * (g - 2.0 * g0));
        const double r = g / big;
        return std::exp(0.5 * (big - g) * t) * (1.0 + 0.5 * (1.0 - r) * std::expm1(-big * t));
    }
    case Regime::Critical:
        return std::exp(-0.5 * g * t) * (1.0 + 0.5 * g * t);
    }
    return 0.0;
}

std::vector<AmplitudePair> c0_volterra(const ReservoirSpectrum& s, double t_max, double dt,
                                       VolterraScheme scheme) {
    const std::size_t n = grid_steps(t_max, dt);
    switch (scheme) {
    case VolterraScheme::ExponentialRecursion: return volterra_recursion(s, n, dt);
    case VolterraScheme::TrapezoidQuadrature: return volterra_trapezoid(s, n, dt);
    }
    throw InvalidArgument("c0_volterra: unknown scheme");
}

} // namespace entdyn::amplitude
