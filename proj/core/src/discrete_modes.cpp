// Single-excitation bath of finitely many modes, integrated in the interaction picture:
//   i dC0/dt = sum_k g_k e^{i D_k t} C_k,   i dC_k/dt = g_k e^{-i D_k t} C0,   D_k = omega0 - omega_k.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "entdyn/amplitude.hpp"
#include "entdyn/error.hpp"
#include "entdyn/grid.hpp"

namespace entdyn::amplitude {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// RK4 stability/accuracy targets for one substep.
constexpr double kMaxCouplingStep = 0.01;
constexpr double kMaxPhaseStep = 0.1;
constexpr std::size_t kPhaseResync = 1024;

struct Derivative {
    cplx c0;
    std::vector<cplx> ck;
};

void rhs(const std::vector<double>& g, const std::vector<cplx>& phase, cplx c0,
         const std::vector<cplx>& ck, Derivative& out) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < ck.size(); ++k) {
        acc += g[k] * phase[k] * ck[k];
        out.ck[k] = -kI * g[k] * std::conj(phase[k]) * c0;
    }
    out.c0 = -kI * acc;
}

} // namespace

double DiscreteModeState::norm() const noexcept {
    return std::accumulate(ck.begin(), ck.end(), std::norm(c0),
                           [](double acc, const cplx& v) { return acc + std::norm(v); });
}

DiscreteModeState make_discrete_bath(const ReservoirSpectrum& s, std::size_t n_modes, double window) {
    if (n_modes < 100) throw InvalidArgument("discrete bath needs at least 100 modes");
    if (!(window >= 100.0 * s.gamma()))
        throw InvalidArgument("discrete bath window must cover at least 100 gamma about omega0");
    if (window > s.omega0())
        throw InvalidArgument("discrete bath window extends below zero frequency; raise omega0");

    const double d_omega = 2.0 * window / static_cast<double>(n_modes);
    DiscreteModeState st;
    st.ck.assign(n_modes, cplx{0.0, 0.0});
    st.mode_freqs.resize(n_modes);
    st.couplings.resize(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        const double omega = s.omega0() - window + (static_cast<double>(k) + 0.5) * d_omega;
        st.mode_freqs[k] = omega;
        st.couplings[k] = std::sqrt(spectral::spectral_density(s, omega) * d_omega);
    }
    return st;
}

DiscreteModeRun c0_discrete_modes(const ReservoirSpectrum& s, std::size_t n_modes, double window,
                                  double t_max, double dt) {
    const std::size_t n_out = grid_steps(t_max, dt);
    DiscreteModeState st = make_discrete_bath(s, n_modes, window);

    const double d_omega = 2.0 * window / static_cast<double>(n_modes);
    const double recurrence = 2.0 * std::numbers::pi / d_omega;
    if (recurrence < t_max)
        throw InvalidArgument("bath recurrence time " + std::to_string(recurrence) + " is shorter than t_max " +
                              std::to_string(t_max) + "; use more modes or a narrower window");

    const double g_max = *std::max_element(st.couplings.begin(), st.couplings.end());
    const double max_detuning = window;
    const double h_limit = std::min(kMaxCouplingStep / g_max, kMaxPhaseStep / max_detuning);
    const std::size_t substeps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(dt / h_limit)));
    const double h = dt / static_cast<double>(substeps);

    const std::size_t n = st.ck.size();
    std::vector<double> detuning(n);
    std::vector<cplx> half_rot(n);
    for (std::size_t k = 0; k < n; ++k) {
        detuning[k] = s.omega0() - st.mode_freqs[k];
        half_rot[k] = std::polar(1.0, 0.5 * detuning[k] * h);
    }

    std::vector<cplx> ph0(n, cplx{1.0, 0.0}), ph_mid(n), ph_end(n);
    Derivative k1{0.0, std::vector<cplx>(n)}, k2 = k1, k3 = k1, k4 = k1;
    std::vector<cplx> tmp(n);

    DiscreteModeRun run;
    run.substeps = substeps;
    run.series.reserve(n_out + 1);
    run.series.push_back({0.0, 1.0, 0.0});

    std::size_t step = 0;
    for (std::size_t i = 1; i <= n_out; ++i) {
        for (std::size_t sub = 0; sub < substeps; ++sub, ++step) {
            if (step % kPhaseResync == 0) {
                const double t = static_cast<double>(step) * h;
                for (std::size_t k = 0; k < n; ++k) ph0[k] = std::polar(1.0, detuning[k] * t);
            }
            for (std::size_t k = 0; k < n; ++k) {
                ph_mid[k] = ph0[k] * half_rot[k];
                ph_end[k] = ph_mid[k] * half_rot[k];
            }

            rhs(st.couplings, ph0, st.c0, st.ck, k1);
            for (std::size_t k = 0; k < n; ++k) tmp[k] = st.ck[k] + 0.5 * h * k1.ck[k];
            rhs(st.couplings, ph_mid, st.c0 + 0.5 * h * k1.c0, tmp, k2);
            for (std::size_t k = 0; k < n; ++k) tmp[k] = st.ck[k] + 0.5 * h * k2.ck[k];
            rhs(st.couplings, ph_mid, st.c0 + 0.5 * h * k2.c0, tmp, k3);
            for (std::size_t k = 0; k < n; ++k) tmp[k] = st.ck[k] + h * k3.ck[k];
            rhs(st.couplings, ph_end, st.c0 + h * k3.c0, tmp, k4);

            st.c0 += (h / 6.0) * (k1.c0 + 2.0 * k2.c0 + 2.0 * k3.c0 + k4.c0);
            for (std::size_t k = 0; k < n; ++k)
                st.ck[k] += (h / 6.0) * (k1.ck[k] + 2.0 * k2.ck[k] + 2.0 * k3.ck[k] + k4.ck[k]);
            ph0.swap(ph_end);
        }
        run.max_norm_error = std::max(run.max_norm_error, std::abs(st.norm() - 1.0));

        const double mag = std::min(1.0, std::abs(st.c0));
        const double c0 = st.c0.real() < 0.0 ? -mag : mag;
        run.series.push_back(AmplitudePair::from_c0(static_cast<double>(i) * dt, c0));
    }
    run.final_state = std::move(st);
    return run;
}

} // namespace entdyn::amplitude
