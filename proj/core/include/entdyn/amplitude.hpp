// amplitude.hpp: Excited-state amplitude C0(t) of one qubit in a Lorentzian bath
//
// Three independent routes are provided: the analytic solution, direct
// integration of the integro-differential equation
//     dC0/dt = -∫_0^t F(t - t') C0(t') dt',
// and unitary evolution of a finite set of bath modes in the single-excitation
// sector. They are meant to be checked against each other.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "entdyn/spectral.hpp"

namespace entdyn::amplitude {

using spectral::ReservoirSpectrum;

// (C0, C~) at time t with C~ = sqrt(1 - C0^2) >= 0.
struct AmplitudePair {
    double t{0.0};
    double c0{1.0};
    double c_tilde{0.0};

    // Fills c_tilde from c0; round-off below zero under the root is clamped.
    static AmplitudePair from_c0(double t, double c0) noexcept;
};

enum class Regime { NonMarkovian, Markovian, Critical };

std::string_view to_string(Regime r) noexcept;

// Critical when |2 gamma0 - gamma| <= 1e-9 gamma0.
Regime classify_regime(const ReservoirSpectrum& s) noexcept;

double c0_closed_form(const ReservoirSpectrum& s, double t);

enum class VolterraScheme {
    // Auxiliary memory integral I(t) with dI/dt = -gamma I + (gamma0 gamma / 2) C0,
    // advanced with the trapezoidal rule. O(n).
    ExponentialRecursion,
    // Full trapezoid quadrature of the memory integral against memory_kernel. O(n^2).
    TrapezoidQuadrature,
};

// Integrates the amplitude equation on t = 0, dt, ..., both schemes second order.
// Throws NumericalError if |C0| exceeds 1 + 1e-6.
std::vector<AmplitudePair> c0_volterra(const ReservoirSpectrum& s, double t_max, double dt,
                                       VolterraScheme scheme = VolterraScheme::ExponentialRecursion);

// Single-excitation sector of one qubit coupled to sampled bath modes.
struct DiscreteModeState {
    std::complex<double> c0{1.0, 0.0};
    std::vector<std::complex<double>> ck;
    std::vector<double> mode_freqs;
    std::vector<double> couplings;

    double norm() const noexcept;
};

// n_modes midpoint-sampled frequencies on [omega0 - window, omega0 + window],
// g_k = sqrt(J(omega_k) d_omega), qubit excited, bath empty.
DiscreteModeState make_discrete_bath(const ReservoirSpectrum& s, std::size_t n_modes, double window);

struct DiscreteModeRun {
    std::vector<AmplitudePair> series;
    double max_norm_error{0.0}; // max_t | |C0|^2 + sum |Ck|^2 - 1 |
    std::size_t substeps{1};    // RK4 steps per output step
    DiscreteModeState final_state;
};

// Fixed-step RK4 in the interaction picture, no renormalization. The reported
// c0 is |C0| carrying the sign of Re C0. Rejects windows shorter than the bath
// recurrence time 2 pi / d_omega.
DiscreteModeRun c0_discrete_modes(const ReservoirSpectrum& s, std::size_t n_modes, double window,
                                  double t_max, double dt);

} // namespace entdyn::amplitude
