// grid.hpp: Uniform time grids shared by the solvers and the analysis code

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "entdyn/error.hpp"

namespace entdyn {

// Number of steps n such that n * dt covers [0, t_max] (t_max is rounded
// down to the grid when it is not a multiple of dt).
inline std::size_t grid_steps(double t_max, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive and finite");
    if (!(t_max >= dt) || !std::isfinite(t_max)) throw InvalidArgument("t_max must be >= dt");
    return static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
}

// t_i = i * dt for i = 0..n; no accumulated round-off.
inline std::vector<double> uniform_grid(double t_max, double dt) {
    const std::size_t n = grid_steps(t_max, dt);
    std::vector<double> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) t[i] = static_cast<double>(i) * dt;
    return t;
}

} // namespace entdyn
