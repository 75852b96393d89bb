// dynamics.hpp: Full trajectory pipeline
//
// amplitude series -> four reduced density matrices per grid point ->
// concurrence series -> events and regime classification.
//
// Both qubit-reservoir pairs are identical and independent, so one amplitude
// series feeds all four partitions.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "entdyn/amplitude.hpp"
#include "entdyn/events.hpp"
#include "entdyn/series.hpp"
#include "entdyn/states.hpp"

namespace entdyn::dynamics {

using amplitude::AmplitudePair;
using spectral::ReservoirSpectrum;
using states::InitialStateParam;
using states::Partition;

enum class Solver { ClosedForm, Volterra, DiscreteModes };

// "closed", "volterra", "modes"
std::string_view to_string(Solver s) noexcept;
Solver solver_from_string(std::string_view name);

struct SolverOptions {
    Solver solver{Solver::ClosedForm};
    amplitude::VolterraScheme scheme{amplitude::VolterraScheme::ExponentialRecursion};
    std::size_t n_modes{4000};
    double window_ratio{20.0}; // bath half-width in units of gamma0
};

// Amplitude series on t = 0, dt, ..., plus a continuous-time C0(t). For the
// numerical solvers the continuous form is a local cubic through the grid.
struct AmplitudeTrack {
    std::vector<AmplitudePair> series;
    std::function<double(double)> c0_at;
};

AmplitudeTrack solve_amplitude(const ReservoirSpectrum& s, double t_max, double dt, const SolverOptions& opts = {});

struct TrajectoryResult {
    std::vector<AmplitudePair> amplitude;
    std::array<ConcurrenceSeries, 4> series;               // indexed like states::kAllPartitions
    std::array<std::vector<events::EntanglementEvent>, 4> events;
    events::Q1Q2Classification q1q2_regime;
    events::R1R2Classification r1r2_regime;

    const ConcurrenceSeries& series_for(Partition p) const noexcept { return series[static_cast<std::size_t>(p)]; }
    const std::vector<events::EntanglementEvent>& events_for(Partition p) const noexcept {
        return events[static_cast<std::size_t>(p)];
    }
};

// Every density matrix is validated; a failure throws ValidationError naming
// t, the partition and the violated condition.
TrajectoryResult run_trajectory(InitialStateParam alpha, const ReservoirSpectrum& s, double t_max, double dt,
                                const SolverOptions& opts = {});

} // namespace entdyn::dynamics
