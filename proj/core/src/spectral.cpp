#include "entdyn/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entdyn/error.hpp"

namespace entdyn::spectral {

ReservoirSpectrum::ReservoirSpectrum(double gamma0, double gamma, double omega0)
    : gamma0_(gamma0), gamma_(gamma), omega0_(omega0) {
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
        throw InvalidArgument("gamma0 must be positive and finite, got " + std::to_string(gamma0));
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw InvalidArgument("gamma must be positive and finite, got " + std::to_string(gamma));
    if (!std::isfinite(omega0) || omega0 < 0.0)
        throw InvalidArgument("omega0 must be finite and non-negative");
    if (omega0_ == 0.0) omega0_ = kDefaultOmega0Ratio * gamma0_;
}

ReservoirSpectrum ReservoirSpectrum::from_ratio(double gamma_ratio, double gamma0) {
    return ReservoirSpectrum(gamma0, gamma_ratio * gamma0);
}

double spectral_density(const ReservoirSpectrum& s, double omega) noexcept {
    const double detuning = s.omega0() - omega;
    const double g2 = s.gamma() * s.gamma();
    return s.gamma0() / (2.0 * std::numbers::pi) * g2 / (detuning * detuning + g2);
}

std::complex<double> memory_kernel(const ReservoirSpectrum& s, double tau) {
    if (tau < 0.0 || std::isnan(tau))
        throw InvalidArgument("memory_kernel: tau must be >= 0");
    // Residue at omega = omega0 + i gamma of the Lorentzian.
    return {0.5 * s.gamma0() * s.gamma() * std::exp(-s.gamma() * tau), 0.0};
}

std::complex<double> memory_kernel_quadrature(const ReservoirSpectrum& s, double tau,
                                              double window, long points) {
    if (!(window > 0.0)) throw InvalidArgument("memory_kernel_quadrature: window must be > 0");
    if (points < 1000) throw InvalidArgument("memory_kernel_quadrature: points must be >= 1000");
    if (tau < 0.0 || std::isnan(tau))
        throw InvalidArgument("memory_kernel_quadrature: tau must be >= 0");

    const long n = points % 2 == 0 ? points : points + 1; // Simpson needs an even count
    const double lo = s.omega0() - window;
    const double h = 2.0 * window / static_cast<double>(n);

    auto integrand = [&](double omega) {
        const double phase = (s.omega0() - omega) * tau;
        return spectral_density(s, omega) * std::complex<double>(std::cos(phase), std::sin(phase));
    };

    std::complex<double> acc = integrand(lo) + integrand(lo + 2.0 * window);
    for (long k = 1; k < n; ++k) {
        const double weight = (k % 2 == 1) ? 4.0 : 2.0;
        acc += weight * integrand(lo + static_cast<double>(k) * h);
    }
    return acc * (h / 3.0);
}

} // namespace entdyn::spectral
