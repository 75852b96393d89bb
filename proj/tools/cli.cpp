#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "csv.hpp"
#include "entdyn/dynamics.hpp"
#include "entdyn/error.hpp"
#include "entdyn/sweep.hpp"
#include "gnuplot.hpp"

namespace entdyn::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    double gamma_ratio{0.1};
    double gamma0{1.0};
    double t_max{15.0};
    double dt{1e-3};
    std::string out;
    std::string gnuplot;
    unsigned threads{0};
};

struct AmplitudeOptions {
    std::string solver{"closed"};
    std::string scheme{"recursion"};
    std::size_t n_modes{4000};
    double window{20.0};
};

struct DynamicsOptions {
    double alpha{0.35};
    std::vector<std::string> partitions{"q1q2", "r1r2", "q1r1", "q1r2"};
};

struct SweepOptions {
    double alpha_min{0.0};
    double alpha_max{1.0};
    double alpha_step{0.01};
    bool boundaries{false};
};

struct Figure2Options {
    double alpha{0.35};
    std::vector<double> gamma_ratios{sweep::kFigure2Ratios.begin(), sweep::kFigure2Ratios.end()};
};

// Main table goes to --out (or `fallback`); companion tables go next to it,
// or follow the main table on the same stream after a blank line.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {
        if (!path_.empty()) {
            file_ = open(path_);
        }
    }

    std::ostream& main() { return file_ ? *file_ : fallback_; }

    std::ostream& companion(const std::string& suffix) {
        if (path_.empty()) {
            fallback_ << '\n';
            return fallback_;
        }
        std::filesystem::path p(path_);
        p.replace_filename(p.stem().string() + "." + suffix + ".csv");
        companion_ = open(p.string());
        return *companion_;
    }

    void finish() {
        for (auto* f : {file_.get(), companion_.get()}) {
            if (!f) continue;
            f->flush();
            if (!*f) throw IoError("write failed");
        }
        fallback_.flush();
    }

    const std::string& path() const { return path_; }

private:
    static std::unique_ptr<std::ofstream> open(const std::string& path) {
        auto f = std::make_unique<std::ofstream>(path, std::ios::out | std::ios::trunc | std::ios::binary);
        if (!*f) throw IoError("cannot open '" + path + "' for writing");
        return f;
    }

    std::string path_;
    std::ostream& fallback_;
    std::unique_ptr<std::ofstream> file_;
    std::unique_ptr<std::ofstream> companion_;
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f.flush()) throw IoError("write failed for '" + path + "'");
}

void check_gnuplot(const CommonOptions& c) {
    if (!c.gnuplot.empty() && c.out.empty()) throw InvalidArgument("--gnuplot needs --out so the script can reference the data file");
}

spectral::ReservoirSpectrum spectrum(const CommonOptions& c) {
    return spectral::ReservoirSpectrum::from_ratio(c.gamma_ratio, c.gamma0);
}

// Flags are in units of 1 / gamma0; the library works in absolute time.
double abs_time(const CommonOptions& c, double tau) { return tau / c.gamma0; }

void add_common(CLI::App* sub, CommonOptions& c, bool with_ratio = true) {
    if (with_ratio)
        sub->add_option("--gamma-ratio", c.gamma_ratio, "reservoir width gamma / gamma0")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    sub->add_option("--gamma0", c.gamma0, "qubit decay rate; output times become absolute")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--t-max", c.t_max, "end of the time window (units of 1/gamma0)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--dt", c.dt, "time step (units of 1/gamma0)")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--out", c.out, "output CSV path (default: stdout)");
    sub->add_option("--gnuplot", c.gnuplot, "also write a gnuplot script for the CSV to this path");
    sub->add_option("--threads", c.threads, "worker threads for sweeps (0 = all cores)")->capture_default_str();
}

void cmd_amplitude(const CommonOptions& c, const AmplitudeOptions& a, std::ostream& stdout_) {
    check_gnuplot(c);
    dynamics::SolverOptions opts;
    opts.solver = dynamics::solver_from_string(a.solver);
    opts.scheme = a.scheme == "trapezoid" ? amplitude::VolterraScheme::TrapezoidQuadrature
                                          : amplitude::VolterraScheme::ExponentialRecursion;
    opts.n_modes = a.n_modes;
    opts.window_ratio = a.window;
    const auto track = dynamics::solve_amplitude(spectrum(c), abs_time(c, c.t_max), abs_time(c, c.dt), opts);

    Output out(c.out, stdout_);
    auto& os = out.main();
    os << "t,c0,c0_sq,c_tilde_sq\n";
    for (const auto& p : track.series)
        os << format_time(p.t) << ',' << format_value(p.c0) << ',' << format_value(p.c0 * p.c0) << ','
           << format_value(p.c_tilde * p.c_tilde) << '\n';
    out.finish();
    if (!c.gnuplot.empty()) write_text_file(c.gnuplot, gnuplot_amplitude(c.out));
}

void cmd_dynamics(const CommonOptions& c, const AmplitudeOptions& a, const DynamicsOptions& d, std::ostream& stdout_) {
    check_gnuplot(c);
    std::vector<states::Partition> selected;
    for (states::Partition p : states::kAllPartitions)
        for (const auto& name : d.partitions)
            if (states::partition_from_string(name) == p) {
                selected.push_back(p);
                break;
            }
    if (selected.empty()) throw InvalidArgument("no partitions selected");

    dynamics::SolverOptions opts;
    opts.solver = dynamics::solver_from_string(a.solver);
    opts.n_modes = a.n_modes;
    opts.window_ratio = a.window;
    const auto traj = dynamics::run_trajectory(states::InitialStateParam(d.alpha), spectrum(c), abs_time(c, c.t_max),
                                               abs_time(c, c.dt), opts);

    Output out(c.out, stdout_);
    auto& os = out.main();
    os << 't';
    for (auto p : selected) os << ",C_" << states::to_string(p);
    os << '\n';
    for (std::size_t i = 0; i < traj.amplitude.size(); ++i) {
        os << format_time(traj.amplitude[i].t);
        for (auto p : selected) os << ',' << format_value(traj.series_for(p).values[i]);
        os << '\n';
    }

    auto& ev = out.companion("events");
    ev << "partition,kind,time\n";
    for (auto p : selected)
        for (const auto& e : traj.events_for(p))
            ev << states::to_string(p) << ',' << events::to_string(e.kind) << ',' << format_time(e.t) << '\n';
    ev << "# regime q1q2=" << events::to_string(traj.q1q2_regime.regime)
       << " r1r2=" << events::to_string(traj.r1r2_regime.regime) << " t_max=" << format_time(traj.q1q2_regime.t_max)
       << '\n';
    out.finish();
    if (!c.gnuplot.empty()) write_text_file(c.gnuplot, gnuplot_dynamics(c.out, d.alpha, c.gamma_ratio));
}

void cmd_sweep(const CommonOptions& c, const SweepOptions& sw, std::ostream& stdout_) {
    check_gnuplot(c);
    const auto alphas = sweep::alpha_grid(sw.alpha_min, sw.alpha_max, sw.alpha_step);
    const auto s = spectrum(c);
    const auto surface = sweep::sweep_alpha_time(s, alphas, abs_time(c, c.t_max), abs_time(c, c.dt), c.threads);
    std::optional<sweep::BoundaryTable> bounds;
    if (sw.boundaries) bounds = sweep::regime_boundary_map(s, alphas, abs_time(c, c.t_max), 1e-3, c.threads);

    Output out(c.out, stdout_);
    auto& os = out.main();
    os << "alpha,t,partition,concurrence\n";
    surface.for_each_row([&os](double alpha, double t, states::Partition p, double v) {
        os << format_time(alpha) << ',' << format_time(t) << ',' << states::to_string(p) << ',' << format_value(v)
           << '\n';
    });

    if (bounds) {
        auto& bs = out.companion("boundaries");
        bs << "alpha,q1q2_regime,r1r2_regime\n";
        for (const auto& row : bounds->rows)
            bs << format_time(row.alpha) << ',' << events::to_string(row.q1q2) << ',' << events::to_string(row.r1r2)
               << '\n';
        auto opt = [](const std::optional<double>& v) { return v ? format_time(*v) : std::string("none"); };
        bs << "# critical_alpha_esd_onset=" << opt(bounds->esd_onset) << '\n'
           << "# critical_alpha_permanent_onset=" << opt(bounds->permanent_onset) << '\n'
           << "# t_max=" << format_time(bounds->t_max) << '\n';
    }
    out.finish();
    if (!c.gnuplot.empty()) write_text_file(c.gnuplot, gnuplot_sweep(c.out, c.gamma_ratio));
}

void cmd_figure2(const CommonOptions& c, const Figure2Options& f, std::ostream& stdout_) {
    check_gnuplot(c);
    const auto table =
        sweep::figure2_curves(f.alpha, f.gamma_ratios, abs_time(c, c.t_max), abs_time(c, c.dt), c.gamma0, c.threads);

    Output out(c.out, stdout_);
    auto& os = out.main();
    os << "gamma_ratio,t,partition,concurrence\n";
    for (std::size_t r = 0; r < table.runs.size(); ++r) {
        const auto& run = table.runs[r];
        const std::string ratio = format_time(table.gamma_ratios[r]);
        for (std::size_t i = 0; i < run.amplitude.size(); ++i)
            for (auto p : states::kAllPartitions)
                os << ratio << ',' << format_time(run.amplitude[i].t) << ',' << states::to_string(p) << ','
                   << format_value(run.series_for(p).values[i]) << '\n';
    }

    auto& ev = out.companion("events");
    ev << "gamma_ratio,partition,kind,time\n";
    for (std::size_t r = 0; r < table.runs.size(); ++r)
        for (auto p : states::kAllPartitions)
            for (const auto& e : table.runs[r].events_for(p))
                ev << format_time(table.gamma_ratios[r]) << ',' << states::to_string(p) << ','
                   << events::to_string(e.kind) << ',' << format_time(e.t) << '\n';
    out.finish();
    if (!c.gnuplot.empty()) write_text_file(c.gnuplot, gnuplot_figure2(c.out, f.alpha, f.gamma_ratios));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"entdyn: two-qubit entanglement dynamics in independent Lorentzian reservoirs"};
    app.name(args.empty() ? "entdyn" : std::filesystem::path(args.front()).filename().string());
    app.require_subcommand(1);

    CommonOptions common;
    AmplitudeOptions amp;
    DynamicsOptions dyn;
    SweepOptions sw;
    Figure2Options fig;

    auto solver_opts = [&amp](CLI::App* sub) {
        sub->add_option("--solver", amp.solver, "amplitude solver")
            ->check(CLI::IsMember({"closed", "volterra", "modes"}))
            ->capture_default_str();
        sub->add_option("--n-modes", amp.n_modes, "bath modes for --solver modes")
            ->check(CLI::Range(std::size_t{100}, std::size_t{10000000}))
            ->capture_default_str();
        sub->add_option("--window", amp.window, "bath half-width for --solver modes (units of gamma0)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* a = app.add_subcommand("amplitude", "C0(t) and C~(t)^2 of one qubit");
    add_common(a, common);
    solver_opts(a);
    a->add_option("--scheme", amp.scheme, "Volterra scheme")
        ->check(CLI::IsMember({"recursion", "trapezoid"}))
        ->capture_default_str();

    auto* d = app.add_subcommand("dynamics", "concurrence of all partitions plus events");
    add_common(d, common);
    solver_opts(d);
    d->add_option("--alpha", dyn.alpha, "initial-state parameter")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    d->add_option("--partitions", dyn.partitions, "subset of q1q2,r1r2,q1r1,q1r2")
        ->delimiter(',')
        ->check(CLI::IsMember({"q1q2", "r1r2", "q1r1", "q1r2"}));

    auto* s = app.add_subcommand("sweep", "long-format concurrence surface over alpha and t");
    add_common(s, common);
    s->add_option("--alpha-min", sw.alpha_min)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    s->add_option("--alpha-max", sw.alpha_max)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    s->add_option("--alpha-step", sw.alpha_step)->check(CLI::PositiveNumber)->capture_default_str();
    s->add_flag("--boundaries", sw.boundaries, "also emit the regime map and critical alphas");

    auto* f = app.add_subcommand("figure2", "fixed-alpha curves for several reservoir widths");
    add_common(f, common, false);
    f->add_option("--alpha", fig.alpha)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    f->add_option("--gamma-ratios", fig.gamma_ratios, "comma-separated gamma / gamma0 values")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s_ : args) argv.push_back(s_.c_str());
    if (argv.empty()) argv.push_back("entdyn");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (a->parsed()) cmd_amplitude(common, amp, out);
        else if (d->parsed()) cmd_dynamics(common, amp, dyn, out);
        else if (s->parsed()) cmd_sweep(common, sw, out);
        else if (f->parsed()) cmd_figure2(common, fig, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ValidationError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const IoError& e) {
        err << "I/O failure: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

} // namespace entdyn::cli
