#include "entdyn/series.hpp"

#include <cmath>

#include "entdyn/error.hpp"

namespace entdyn {

void check_uniform(const ConcurrenceSeries& series) {
    if (series.times.empty()) throw InvalidArgument("concurrence series is empty");
    if (series.times.size() != series.values.size())
        throw InvalidArgument("concurrence series: times and values differ in length");
    if (series.times.size() == 1) return;
    const double t0 = series.times.front();
    const double dt = series.times[1] - t0;
    if (!(dt > 0.0)) throw InvalidArgument("concurrence series: times must increase");
    for (std::size_t i = 1; i < series.times.size(); ++i) {
        const double expected = t0 + static_cast<double>(i) * dt;
        if (std::abs(series.times[i] - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
            throw InvalidArgument("concurrence series: grid is not uniform at index " + std::to_string(i));
    }
}

} // namespace entdyn
