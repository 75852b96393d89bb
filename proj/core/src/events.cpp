#include "entdyn/events.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entdyn/amplitude.hpp"
#include "entdyn/concurrence.hpp"
#include "entdyn/error.hpp"
#include "entdyn/grid.hpp"

namespace entdyn::events {

namespace {

ConcurrenceSeries closed_form_series(Partition p, InitialStateParam alpha, const ReservoirSpectrum& s,
                                     double t_max, ConcurrenceFn& fn) {
    if (!(t_max >= kMinClassifyWindow / s.gamma0()))
        throw InvalidArgument("regime classification needs t_max >= 15 / gamma0");
    const double dt = kDefaultScanDt / s.gamma0();
    fn = [p, alpha, s](double t) {
        const auto amp = amplitude::AmplitudePair::from_c0(t, amplitude::c0_closed_form(s, t));
        return concurrence::concurrence_x(states::reduced_state(p, alpha, amp));
    };
    ConcurrenceSeries series;
    series.partition = p;
    series.times = uniform_grid(t_max, dt);
    series.values.reserve(series.times.size());
    for (double t : series.times) series.values.push_back(fn(t));
    series.meta = {alpha.value(), s.gamma0(), s.gamma(), "closed", dt};
    return series;
}

} // namespace

std::string_view to_string(EventKind k) noexcept {
    switch (k) {
    case EventKind::Death: return "Death";
    case EventKind::Birth: return "Birth";
    case EventKind::Revival: return "Revival";
    }
    return "?";
}

std::string_view to_string(Q1Q2Regime r) noexcept {
    switch (r) {
    case Q1Q2Regime::NoESD: return "NoESD";
    case Q1Q2Regime::ESDWithRevival: return "ESDWithRevival";
    case Q1Q2Regime::PermanentESD: return "PermanentESD";
    }
    return "?";
}

std::string_view to_string(R1R2Regime r) noexcept {
    switch (r) {
    case R1R2Regime::ImmediateBirth: return "ImmediateBirth";
    case R1R2Regime::SuddenBirth: return "SuddenBirth";
    case R1R2Regime::NoBirthInWindow: return "NoBirthInWindow";
    }
    return "?";
}

namespace {

// Measure of {t in [lo, hi] : f(t) <= eps} around m, assuming f is unimodal
// on the bracket and f(lo), f(hi) > eps.
double sublevel_width(const ConcurrenceFn& f, double lo, double m, double hi, double eps) {
    auto edge = [&](double inside, double outside) {
        for (int k = 0; k < 200 && std::abs(outside - inside) > 1e-15 * std::max(1.0, std::abs(inside)); ++k) {
            const double mid = 0.5 * (inside + outside);
            (f(mid) <= eps ? inside : outside) = mid;
        }
        return inside;
    };
    return edge(m, hi) - edge(m, lo);
}

// A concurrence can dip to zero at a single instant (it scales like C0^2
// near a zero of C0 when alpha < 1/3). That is not sudden death, which
// needs a zero set of positive length. Near a tangential zero the
// sublevel set shrinks like sqrt(eps); an interval of death does not shrink.
bool tangential_touch(const ConcurrenceFn& f, double lo, double hi, double zero_tol) {
    const double ratio = (3.0 - std::sqrt(5.0)) / 2.0;
    double a = lo, b = hi;
    double x1 = a + ratio * (b - a), x2 = b - ratio * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int k = 0; k < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++k) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + ratio * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - ratio * (b - a);
            f2 = f(x2);
        }
    }
    const double m = f1 <= f2 ? x1 : x2;
    const double fine = zero_tol * 1e-6;
    if (f(m) > fine) return true;
    const double coarse_w = sublevel_width(f, lo, m, hi, zero_tol);
    const double fine_w = sublevel_width(f, lo, m, hi, fine);
    return fine_w < 0.5 * coarse_w;
}

std::vector<EntanglementEvent> detect_impl(const ConcurrenceSeries& series, const ConcurrenceFn& concurrence,
                                           double zero_tol, bool filter_touches) {
    check_uniform(series);
    if (!concurrence) throw InvalidArgument("detect_events: missing concurrence function");

    const auto& v = series.values;
    const auto& t = series.times;
    std::vector<char> alive(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) alive[i] = v[i] > zero_tol;

    if (filter_touches) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (alive[i] || !alive[i - 1]) continue;
            std::size_t j = i;
            while (j < v.size() && !alive[j]) ++j;
            if (j == v.size()) break;
            if (tangential_touch(concurrence, t[i - 1], t[j], zero_tol))
                std::fill(alive.begin() + static_cast<std::ptrdiff_t>(i), alive.begin() + static_cast<std::ptrdiff_t>(j), 1);
            i = j;
        }
    }

    std::vector<EntanglementEvent> out;
    bool seen_death = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const bool was = alive[i - 1];
        if (alive[i] == was) continue;
        double a = t[i - 1], b = t[i];
        // Narrow [a, b] keeping a on the old side.
        while (b - a >= kBisectionWidth) {
            const double mid = 0.5 * (a + b);
            if ((concurrence(mid) > zero_tol) == was) a = mid;
            else b = mid;
        }
        EntanglementEvent ev;
        ev.partition = series.partition;
        ev.t_lo = a;
        ev.t_hi = b;
        ev.t = 0.5 * (a + b);
        if (was) {
            ev.kind = EventKind::Death;
            seen_death = true;
        } else {
            ev.kind = seen_death ? EventKind::Revival : EventKind::Birth;
        }
        out.push_back(ev);
    }
    return out;
}

} // namespace

std::vector<EntanglementEvent> detect_events(const ConcurrenceSeries& series, const ConcurrenceFn& concurrence,
                                             double zero_tol) {
    return detect_impl(series, concurrence, zero_tol, true);
}

std::vector<EntanglementEvent> detect_events(const ConcurrenceSeries& series, double zero_tol) {
    check_uniform(series);
    const double t0 = series.times.front();
    const double dt = series.times.size() > 1 ? series.times[1] - t0 : 1.0;
    const auto& v = series.values;
    ConcurrenceFn linear = [&v, t0, dt](double t) {
        const double x = (t - t0) / dt;
        const auto i = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(x))), v.size() - 2);
        const double f = x - static_cast<double>(i);
        return (1.0 - f) * v[i] + f * v[i + 1];
    };
    if (v.size() == 1) linear = [&v](double) { return v.front(); };
    return detect_impl(series, linear, zero_tol, false);
}

std::optional<double> threshold_u_star(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InvalidArgument("threshold_u_star: alpha must lie in [0, 1], got " + std::to_string(alpha));
    if (alpha == 0.0) return std::nullopt;
    const double u = (std::sqrt(alpha * alpha - alpha + 2.0) - 1.0) / alpha;
    if (u > 1.0 + 1e-12) return std::nullopt;
    return std::min(u, 1.0);
}

Q1Q2Classification classify_q1q2(const std::vector<EntanglementEvent>& q1q2_events, double t_max) {
    Q1Q2Classification out;
    out.t_max = t_max;
    auto death = std::find_if(q1q2_events.begin(), q1q2_events.end(),
                              [](const EntanglementEvent& e) { return e.kind == EventKind::Death; });
    if (death == q1q2_events.end()) {
        out.regime = Q1Q2Regime::NoESD;
        return out;
    }
    out.first_death = death->t;
    const bool revived = std::any_of(death, q1q2_events.end(),
                                     [](const EntanglementEvent& e) { return e.kind == EventKind::Revival; });
    out.regime = revived ? Q1Q2Regime::ESDWithRevival : Q1Q2Regime::PermanentESD;
    return out;
}

R1R2Classification classify_r1r2(const std::vector<EntanglementEvent>& r1r2_events, double first_step,
                                 double t_max) {
    R1R2Classification out;
    out.t_max = t_max;
    auto birth = std::find_if(r1r2_events.begin(), r1r2_events.end(),
                              [](const EntanglementEvent& e) { return e.kind == EventKind::Birth; });
    if (birth == r1r2_events.end()) {
        out.regime = R1R2Regime::NoBirthInWindow;
        return out;
    }
    out.first_birth = birth->t;
    out.regime = birth->t_hi <= first_step ? R1R2Regime::ImmediateBirth : R1R2Regime::SuddenBirth;
    return out;
}

Q1Q2Classification classify_q1q2_regime(InitialStateParam alpha, const ReservoirSpectrum& s, double t_max) {
    ConcurrenceFn fn;
    const auto series = closed_form_series(Partition::Q1Q2, alpha, s, t_max, fn);
    return classify_q1q2(detect_events(series, fn), series.times.back());
}

R1R2Classification classify_r1r2_regime(InitialStateParam alpha, const ReservoirSpectrum& s, double t_max) {
    ConcurrenceFn fn;
    const auto series = closed_form_series(Partition::R1R2, alpha, s, t_max, fn);
    return classify_r1r2(detect_events(series, fn), series.times[1], series.times.back());
}

} // namespace entdyn::events
