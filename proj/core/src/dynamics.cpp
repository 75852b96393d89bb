#include "entdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <string>

#include "entdyn/concurrence.hpp"
#include "entdyn/error.hpp"
#include "entdyn/grid.hpp"

namespace entdyn::dynamics {

namespace {

// Four-point Lagrange cubic on a uniform grid, stencil shifted at the ends.
std::function<double(double)> cubic_interpolant(const std::vector<AmplitudePair>& series, double dt) {
    auto values = std::make_shared<std::vector<double>>();
    values->reserve(series.size());
    for (const auto& p : series) values->push_back(p.c0);
    return [values, dt](double t) {
        const auto& v = *values;
        const std::size_t n = v.size();
        if (n < 4) return v[std::min(n - 1, static_cast<std::size_t>(std::max(0.0, std::round(t / dt))))];
        const double x = t / dt;
        auto base = static_cast<std::ptrdiff_t>(std::floor(x)) - 1;
        base = std::clamp<std::ptrdiff_t>(base, 0, static_cast<std::ptrdiff_t>(n) - 4);
        const double s = x - static_cast<double>(base);
        double acc = 0.0;
        for (int j = 0; j < 4; ++j) {
            double w = 1.0;
            for (int m = 0; m < 4; ++m)
                if (m != j) w *= (s - m) / static_cast<double>(j - m);
            acc += w * v[static_cast<std::size_t>(base + j)];
        }
        return std::clamp(acc, -1.0, 1.0);
    };
}

} // namespace

std::string_view to_string(Solver s) noexcept {
    switch (s) {
    case Solver::ClosedForm: return "closed";
    case Solver::Volterra: return "volterra";
    case Solver::DiscreteModes: return "modes";
    }
    return "?";
}

Solver solver_from_string(std::string_view name) {
    if (name == "closed") return Solver::ClosedForm;
    if (name == "volterra") return Solver::Volterra;
    if (name == "modes") return Solver::DiscreteModes;
    throw InvalidArgument("unknown solver '" + std::string(name) + "' (expected closed, volterra or modes)");
}

AmplitudeTrack solve_amplitude(const ReservoirSpectrum& s, double t_max, double dt, const SolverOptions& opts) {
    AmplitudeTrack track;
    switch (opts.solver) {
    case Solver::ClosedForm: {
        const auto times = uniform_grid(t_max, dt);
        track.series.reserve(times.size());
        for (double t : times) track.series.push_back(AmplitudePair::from_c0(t, amplitude::c0_closed_form(s, t)));
        track.c0_at = [s](double t) { return amplitude::c0_closed_form(s, t); };
        return track;
    }
    case Solver::Volterra:
        track.series = amplitude::c0_volterra(s, t_max, dt, opts.scheme);
        break;
    case Solver::DiscreteModes:
        track.series =
            amplitude::c0_discrete_modes(s, opts.n_modes, opts.window_ratio * s.gamma0(), t_max, dt).series;
        break;
    }
    track.c0_at = cubic_interpolant(track.series, dt);
    return track;
}

TrajectoryResult run_trajectory(InitialStateParam alpha, const ReservoirSpectrum& s, double t_max, double dt,
                                const SolverOptions& opts) {
    AmplitudeTrack track = solve_amplitude(s, t_max, dt, opts);

    TrajectoryResult out;
    const SeriesMeta meta{alpha.value(), s.gamma0(), s.gamma(), std::string(to_string(opts.solver)), dt};
    for (std::size_t k = 0; k < states::kAllPartitions.size(); ++k) {
        auto& series = out.series[k];
        series.partition = states::kAllPartitions[k];
        series.meta = meta;
        series.times.reserve(track.series.size());
        series.values.reserve(track.series.size());
    }

    for (const auto& amp : track.series) {
        for (std::size_t k = 0; k < states::kAllPartitions.size(); ++k) {
            const Partition p = states::kAllPartitions[k];
            const auto rho = states::reduced_state(p, alpha, amp);
            const auto report = states::validate_density_matrix(rho);
            if (!report.valid()) {
                std::ostringstream os;
                os << "invalid density matrix at t = " << amp.t << ", partition " << states::to_string(p) << ": "
                   << report.describe();
                throw ValidationError(os.str());
            }
            out.series[k].times.push_back(amp.t);
            out.series[k].values.push_back(concurrence::concurrence_x(rho));
        }
    }

    for (std::size_t k = 0; k < states::kAllPartitions.size(); ++k) {
        const Partition p = states::kAllPartitions[k];
        events::ConcurrenceFn fn = [p, alpha, c0_at = track.c0_at](double t) {
            const auto amp = AmplitudePair::from_c0(t, c0_at(t));
            return concurrence::concurrence_x(states::reduced_state(p, alpha, amp));
        };
        out.events[k] = events::detect_events(out.series[k], fn);
    }

    const double t_end = track.series.back().t;
    const double first_step = track.series.size() > 1 ? track.series[1].t : t_end;
    out.q1q2_regime = events::classify_q1q2(out.events_for(Partition::Q1Q2), t_end);
    out.r1r2_regime = events::classify_r1r2(out.events_for(Partition::R1R2), first_step, t_end);
    out.amplitude = std::move(track.series);
    return out;
}

} // namespace entdyn::dynamics
