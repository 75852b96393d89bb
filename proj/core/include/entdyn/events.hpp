// events.hpp: Sudden death, sudden birth and revival detection
//
// A partition is "entangled" at t when its concurrence exceeds zero_tol.
// Transitions found on the grid are refined by bisection on a continuous-time
// concurrence function to a bracket narrower than 1e-8.

#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "entdyn/series.hpp"
#include "entdyn/spectral.hpp"
#include "entdyn/states.hpp"

namespace entdyn::events {

using spectral::ReservoirSpectrum;
using states::InitialStateParam;
using states::Partition;

inline constexpr double kDefaultZeroTol = 1e-12;
inline constexpr double kBisectionWidth = 1e-8;
inline constexpr double kDefaultScanDt = 1e-3; // in units of 1 / gamma0
inline constexpr double kMinClassifyWindow = 15.0; // in units of 1 / gamma0

enum class EventKind { Death, Birth, Revival };

std::string_view to_string(EventKind k) noexcept;

struct EntanglementEvent {
    EventKind kind{EventKind::Death};
    double t{0.0};    // bracket midpoint
    double t_lo{0.0}; // last time known on the old side
    double t_hi{0.0}; // first time known on the new side
    Partition partition{Partition::Q1Q2};
};

using ConcurrenceFn = std::function<double(double)>;

// Positive -> zero is Death; zero -> positive is Revival once a Death has been
// seen on this partition, Birth otherwise. A zero run whose concurrence only
// touches zero at an isolated instant is not reported.
std::vector<EntanglementEvent> detect_events(const ConcurrenceSeries& series, const ConcurrenceFn& concurrence,
                                             double zero_tol = kDefaultZeroTol);

// Same, refining on the piecewise-linear interpolant of the series. The
// interpolant cannot tell a touch from a short death, so no touch filter.
std::vector<EntanglementEvent> detect_events(const ConcurrenceSeries& series, double zero_tol = kDefaultZeroTol);

// Critical value u* of C~^2 at which |z| - sqrt(ad) of the qubit pair changes
// sign: root in [0, 1] of alpha (alpha u^2 + 2u + 1 - alpha) = 1, i.e.
// u* = (sqrt(alpha^2 - alpha + 2) - 1) / alpha. Empty when alpha = 0 or u* > 1
// (the qubits never die). The reservoir pair is entangled exactly when
// C0^2 < u*. Throws InvalidArgument for alpha outside [0, 1].
std::optional<double> threshold_u_star(double alpha);

enum class Q1Q2Regime { NoESD, ESDWithRevival, PermanentESD };
enum class R1R2Regime { ImmediateBirth, SuddenBirth, NoBirthInWindow };

std::string_view to_string(Q1Q2Regime r) noexcept;
std::string_view to_string(R1R2Regime r) noexcept;

// Classifications are certified on [0, t_max] only.
struct Q1Q2Classification {
    Q1Q2Regime regime{Q1Q2Regime::NoESD};
    double t_max{0.0};
    std::optional<double> first_death;
};

struct R1R2Classification {
    R1R2Regime regime{R1R2Regime::NoBirthInWindow};
    double t_max{0.0};
    std::optional<double> first_birth;
};

Q1Q2Classification classify_q1q2(const std::vector<EntanglementEvent>& q1q2_events, double t_max);
// first_step is the first grid time after t = 0; a Birth at or before it is immediate.
R1R2Classification classify_r1r2(const std::vector<EntanglementEvent>& r1r2_events, double first_step, double t_max);

// Scan the closed-form trajectory on a dt = 1e-3 / gamma0 grid and classify.
// Requires t_max >= 15 / gamma0.
Q1Q2Classification classify_q1q2_regime(InitialStateParam alpha, const ReservoirSpectrum& s, double t_max);
R1R2Classification classify_r1r2_regime(InitialStateParam alpha, const ReservoirSpectrum& s, double t_max);

} // namespace entdyn::events
