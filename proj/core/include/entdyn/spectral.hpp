// spectral.hpp: Lorentzian reservoir spectrum and its memory kernel

#pragma once

#include <complex>

namespace entdyn::spectral {

// Lorentzian vacuum reservoir seen by one qubit.
//
// gamma0 is the qubit relaxation rate, gamma the spectral width (inverse
// reservoir correlation time). omega0 only matters for the discrete-mode
// bath; the closed-form kernel depends on detuning alone.
class ReservoirSpectrum {
public:
    static constexpr double kDefaultOmega0Ratio = 100.0;

    // omega0 defaults to 100 * gamma0 when left at zero.
    ReservoirSpectrum(double gamma0, double gamma, double omega0 = 0.0);

    // Convenience for dimensionless runs: gamma0 = 1, gamma = ratio.
    static ReservoirSpectrum from_ratio(double gamma_ratio, double gamma0 = 1.0);

    double gamma0() const noexcept { return gamma0_; }
    double gamma() const noexcept { return gamma_; }
    double omega0() const noexcept { return omega0_; }

private:
    double gamma0_;
    double gamma_;
    double omega0_;
};

// J(omega) = (gamma0 / 2 pi) gamma^2 / ((omega0 - omega)^2 + gamma^2)
double spectral_density(const ReservoirSpectrum& s, double omega) noexcept;

// F(tau) = integral dω J(ω) exp(i (ω0 - ω) tau) = (gamma0 gamma / 2) exp(-gamma tau).
// Throws InvalidArgument for tau < 0.
std::complex<double> memory_kernel(const ReservoirSpectrum& s, double tau);

// Composite Simpson evaluation of the same Fourier integral restricted to
// [omega0 - window, omega0 + window]. Independent of memory_kernel; used to
// check it. Requires window > 0 and points >= 1000.
std::complex<double> memory_kernel_quadrature(const ReservoirSpectrum& s, double tau,
                                              double window, long points);

} // namespace entdyn::spectral
