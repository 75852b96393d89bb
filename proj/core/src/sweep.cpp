#include "entdyn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "entdyn/concurrence.hpp"
#include "entdyn/error.hpp"
#include "entdyn/grid.hpp"

namespace entdyn::sweep {

namespace {

// Runs job(i) for i in [0, n) on up to `threads` workers; rethrows the first failure.
template <class Job>
void parallel_for(std::size_t n, unsigned threads, Job&& job) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(threads, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

void check_alphas(std::span<const double> alphas) {
    if (alphas.empty()) throw InvalidArgument("alpha grid is empty");
    for (double a : alphas)
        if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("alpha grid values must lie in [0, 1]");
}

double bisect_alpha(double lo, double hi, double tol, auto&& is_left) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (is_left(mid)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> alpha_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("alpha step must be positive");
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) throw InvalidArgument("alpha range must satisfy 0 <= min <= max <= 1");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = std::min(hi, lo + static_cast<double>(i) * step);
    return out;
}

SurfaceTable sweep_alpha_time(const ReservoirSpectrum& s, std::span<const double> alphas, double t_max, double dt,
                              unsigned threads) {
    check_alphas(alphas);
    SurfaceTable table;
    table.alphas.assign(alphas.begin(), alphas.end());
    table.times = uniform_grid(t_max, dt);
    table.values.resize(alphas.size());

    // The amplitude does not depend on alpha; solve it once.
    const auto track = dynamics::solve_amplitude(s, t_max, dt);
    parallel_for(alphas.size(), threads, [&](std::size_t a) {
        const states::InitialStateParam alpha(table.alphas[a]);
        for (std::size_t p = 0; p < 4; ++p) {
            auto& col = table.values[a][p];
            col.reserve(track.series.size());
            for (const auto& amp : track.series)
                col.push_back(concurrence::concurrence_x(states::reduced_state(states::kAllPartitions[p], alpha, amp)));
        }
    });
    return table;
}

BoundaryTable regime_boundary_map(const ReservoirSpectrum& s, std::span<const double> alphas, double t_max,
                                  double alpha_tol, unsigned threads) {
    check_alphas(alphas);
    if (!(alpha_tol > 0.0)) throw InvalidArgument("alpha tolerance must be positive");

    BoundaryTable table;
    table.t_max = t_max;
    table.rows.resize(alphas.size());
    parallel_for(alphas.size(), threads, [&](std::size_t i) {
        const states::InitialStateParam alpha(alphas[i]);
        table.rows[i] = {alphas[i], events::classify_q1q2_regime(alpha, s, t_max).regime,
                         events::classify_r1r2_regime(alpha, s, t_max).regime};
    });
    std::sort(table.rows.begin(), table.rows.end(),
              [](const BoundaryRow& x, const BoundaryRow& y) { return x.alpha < y.alpha; });

    auto regime_at = [&](double a) {
        return events::classify_q1q2_regime(states::InitialStateParam(a), s, t_max).regime;
    };
    using events::Q1Q2Regime;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
        const auto& l = table.rows[i];
        const auto& r = table.rows[i + 1];
        if (!table.esd_onset && l.q1q2 == Q1Q2Regime::NoESD && r.q1q2 != Q1Q2Regime::NoESD)
            table.esd_onset = bisect_alpha(l.alpha, r.alpha, alpha_tol,
                                           [&](double a) { return regime_at(a) == Q1Q2Regime::NoESD; });
        if (!table.permanent_onset && l.q1q2 == Q1Q2Regime::ESDWithRevival && r.q1q2 == Q1Q2Regime::PermanentESD)
            table.permanent_onset = bisect_alpha(l.alpha, r.alpha, alpha_tol,
                                                 [&](double a) { return regime_at(a) != Q1Q2Regime::PermanentESD; });
    }
    return table;
}

CurveTable figure2_curves(double alpha, std::span<const double> gamma_ratios, double t_max, double dt,
                          double gamma0, unsigned threads) {
    if (gamma_ratios.empty()) throw InvalidArgument("figure2_curves: no gamma ratios given");
    const states::InitialStateParam a(alpha);
    CurveTable table;
    table.alpha = alpha;
    table.gamma_ratios.assign(gamma_ratios.begin(), gamma_ratios.end());
    table.runs.resize(gamma_ratios.size());
    parallel_for(gamma_ratios.size(), threads, [&](std::size_t i) {
        const auto s = ReservoirSpectrum::from_ratio(table.gamma_ratios[i], gamma0);
        table.runs[i] = dynamics::run_trajectory(a, s, t_max, dt);
    });
    return table;
}

} // namespace entdyn::sweep
