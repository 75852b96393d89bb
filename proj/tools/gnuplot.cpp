#include "gnuplot.hpp"

#include <array>
#include <sstream>

#include "csv.hpp"

namespace entdyn::cli {

namespace {

constexpr std::array<const char*, 4> kPartitions{"q1q2", "r1r2", "q1r1", "q1r2"};

void preamble(std::ostringstream& os, const std::string& csv_path) {
    os << "# generated by entdyn; run with: gnuplot -p <this file>\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "data = '" << csv_path << "'\n";
}

} // namespace

std::string gnuplot_amplitude(const std::string& csv_path) {
    std::ostringstream os;
    preamble(os, csv_path);
    os << "set xlabel 'gamma0 t'\n"
       << "set ylabel 'amplitude'\n"
       << "plot data using 1:2 with lines title 'C0', \\\n"
       << "     data using 1:4 with lines title 'C~^2'\n";
    return os.str();
}

std::string gnuplot_dynamics(const std::string& csv_path, double alpha, double gamma_ratio) {
    std::ostringstream os;
    preamble(os, csv_path);
    os << "set title 'alpha = " << format_value(alpha) << ", gamma/gamma0 = " << format_value(gamma_ratio) << "'\n"
       << "set xlabel 'gamma0 t'\n"
       << "set ylabel 'concurrence'\n"
       << "plot for [col=2:*] data using 1:col with lines\n";
    return os.str();
}

std::string gnuplot_sweep(const std::string& csv_path, double gamma_ratio) {
    std::ostringstream os;
    preamble(os, csv_path);
    os << "set xlabel 'alpha'\n"
       << "set ylabel 'gamma0 t'\n"
       << "set zlabel 'concurrence'\n"
       << "set multiplot layout 2,2 title 'gamma/gamma0 = " << format_value(gamma_ratio) << "'\n";
    for (const char* p : kPartitions)
        os << "splot data using 1:2:(strcol(3) eq '" << p << "' ? $4 : 1/0) with dots title '" << p << "'\n";
    os << "unset multiplot\n";
    return os.str();
}

std::string gnuplot_figure2(const std::string& csv_path, double alpha, std::span<const double> gamma_ratios) {
    std::ostringstream os;
    preamble(os, csv_path);
    os << "set xlabel 'gamma0 t'\n"
       << "set ylabel 'concurrence'\n"
       << "set multiplot layout 2,2 title 'alpha = " << format_value(alpha) << "'\n";
    for (const char* p : kPartitions) {
        os << "set title '" << p << "'\n" << "plot ";
        for (std::size_t i = 0; i < gamma_ratios.size(); ++i) {
            const std::string r = format_value(gamma_ratios[i]);
            if (i) os << ", \\\n     ";
            os << "data using 2:(strcol(3) eq '" << p << "' && abs($1 - " << r << ") < 1e-9 ? $4 : 1/0) "
               << "with lines title 'gamma/gamma0 = " << r << "'";
        }
        os << "\n";
    }
    os << "unset multiplot\n";
    return os.str();
}

} // namespace entdyn::cli
