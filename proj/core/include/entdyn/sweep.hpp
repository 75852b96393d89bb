// sweep.hpp: Parameter sweeps over alpha and gamma / gamma0
//
// Work is spread over threads per parameter point; results are stored by
// input index so output order never depends on scheduling.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "entdyn/dynamics.hpp"
#include "entdyn/events.hpp"

namespace entdyn::sweep {

using spectral::ReservoirSpectrum;

// Concurrence surface over (alpha, t) for the four partitions.
struct SurfaceTable {
    std::vector<double> alphas;
    std::vector<double> times;
    std::vector<std::array<std::vector<double>, 4>> values; // [alpha][partition][t]

    std::size_t row_count() const noexcept { return alphas.size() * times.size() * 4; }

    // Rows in (alpha, t, partition) order.
    template <class F>
    void for_each_row(F&& f) const {
        for (std::size_t a = 0; a < alphas.size(); ++a)
            for (std::size_t i = 0; i < times.size(); ++i)
                for (std::size_t p = 0; p < 4; ++p) f(alphas[a], times[i], states::kAllPartitions[p], values[a][p][i]);
    }
};

// Alpha grid lo, lo + step, ..., hi (inclusive up to round-off).
std::vector<double> alpha_grid(double lo, double hi, double step);

// threads == 0 picks std::thread::hardware_concurrency().
SurfaceTable sweep_alpha_time(const ReservoirSpectrum& s, std::span<const double> alphas, double t_max, double dt,
                              unsigned threads = 0);

struct BoundaryRow {
    double alpha{0.0};
    events::Q1Q2Regime q1q2{events::Q1Q2Regime::NoESD};
    events::R1R2Regime r1r2{events::R1R2Regime::NoBirthInWindow};
};

struct BoundaryTable {
    std::vector<BoundaryRow> rows;
    double t_max{0.0};
    // NoESD -> any ESD transition.
    std::optional<double> esd_onset;
    // ESDWithRevival -> PermanentESD transition; empty without a revival band.
    std::optional<double> permanent_onset;
};

// Classifies each alpha (closed-form amplitude) and bisects the two critical
// alphas to within alpha_tol. Requires t_max >= 15 / gamma0.
BoundaryTable regime_boundary_map(const ReservoirSpectrum& s, std::span<const double> alphas, double t_max,
                                  double alpha_tol = 1e-3, unsigned threads = 0);

struct CurveTable {
    double alpha{0.35};
    std::vector<double> gamma_ratios;
    std::vector<dynamics::TrajectoryResult> runs; // one per ratio, shared grid
};

inline constexpr std::array<double, 3> kFigure2Ratios{5.0, 0.1, 0.05};

CurveTable figure2_curves(double alpha, std::span<const double> gamma_ratios, double t_max, double dt,
                          double gamma0 = 1.0, unsigned threads = 0);

} // namespace entdyn::sweep
