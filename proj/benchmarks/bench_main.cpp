// Throughput of the amplitude solvers and the two concurrence routes.

#include <benchmark/benchmark.h>

#include <random>

#include "entdyn/amplitude.hpp"
#include "entdyn/concurrence.hpp"
#include "entdyn/dynamics.hpp"

using namespace entdyn;

namespace {

const spectral::ReservoirSpectrum kBath(1.0, 0.1);

void BM_ClosedForm(benchmark::State& st) {
    double t = 0.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(amplitude::c0_closed_form(kBath, t));
        t = t > 15.0 ? 0.0 : t + 1e-3;
    }
}
BENCHMARK(BM_ClosedForm);

void BM_VolterraRecursion(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(amplitude::c0_volterra(kBath, 15.0, 1e-3, amplitude::VolterraScheme::ExponentialRecursion));
}
BENCHMARK(BM_VolterraRecursion)->Unit(benchmark::kMillisecond);

void BM_VolterraTrapezoid(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(amplitude::c0_volterra(kBath, 15.0, 1e-3, amplitude::VolterraScheme::TrapezoidQuadrature));
}
BENCHMARK(BM_VolterraTrapezoid)->Unit(benchmark::kMillisecond);

void BM_DiscreteModes(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(amplitude::c0_discrete_modes(kBath, static_cast<std::size_t>(st.range(0)), 20.0, 5.0, 1e-2));
}
BENCHMARK(BM_DiscreteModes)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

std::vector<states::XMatrix> sample_states() {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0), ua(0.0, 1.0);
    std::vector<states::XMatrix> v;
    for (int i = 0; i < 256; ++i) {
        const states::InitialStateParam a(ua(rng));
        const auto amp = amplitude::AmplitudePair::from_c0(0.0, u(rng));
        v.push_back(states::reduced_state(states::kAllPartitions[i % 4], a, amp));
    }
    return v;
}

void BM_ConcurrenceX(benchmark::State& st) {
    const auto v = sample_states();
    std::size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(concurrence::concurrence_x(v[i++ % v.size()]));
}
BENCHMARK(BM_ConcurrenceX);

void BM_ConcurrenceWootters(benchmark::State& st) {
    std::vector<concurrence::GeneralDensityMatrix> v;
    for (const auto& x : sample_states()) v.push_back(concurrence::embed(x));
    std::size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(concurrence::concurrence_wootters(v[i++ % v.size()]));
}
BENCHMARK(BM_ConcurrenceWootters);

void BM_Trajectory(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(dynamics::run_trajectory(states::InitialStateParam(0.35), kBath, 15.0, 1e-3));
}
BENCHMARK(BM_Trajectory)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
