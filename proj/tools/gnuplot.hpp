// gnuplot.hpp: Plot scripts that reference the CSV files written by the CLI

#pragma once

#include <span>
#include <string>

namespace entdyn::cli {

std::string gnuplot_amplitude(const std::string& csv_path);
std::string gnuplot_dynamics(const std::string& csv_path, double alpha, double gamma_ratio);
std::string gnuplot_sweep(const std::string& csv_path, double gamma_ratio);
std::string gnuplot_figure2(const std::string& csv_path, double alpha, std::span<const double> gamma_ratios);

} // namespace entdyn::cli
