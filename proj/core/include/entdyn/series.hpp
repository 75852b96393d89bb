// series.hpp: Concurrence time series on a uniform grid

#pragma once

#include <string>
#include <vector>

#include "entdyn/states.hpp"

namespace entdyn {

struct SeriesMeta {
    double alpha{0.0};
    double gamma0{1.0};
    double gamma{0.1};
    std::string solver;
    double dt{0.0};
};

struct ConcurrenceSeries {
    states::Partition partition{states::Partition::Q1Q2};
    std::vector<double> times;
    std::vector<double> values;
    SeriesMeta meta;
};

// Throws InvalidArgument unless the series is non-empty, lengths match and
// the grid is uniform (relative slack 1e-9 per step).
void check_uniform(const ConcurrenceSeries& series);

} // namespace entdyn
