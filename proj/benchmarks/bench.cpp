#include <benchmark/benchmark.h>

#include "blochpath/classical.hpp"
#include "blochpath/geometry.hpp"
#include "blochpath/metrics.hpp"
#include "blochpath/quantum.hpp"

using namespace blochpath;

static void BM_IntegrateClassical(benchmark::State& state) {
    SimConfig cfg{static_cast<double>(state.range(0)), 0.0, 0.0, M_PI, 256};
    for (auto _ : state) {
        auto traj = integrate_classical(cfg);
        benchmark::DoNotOptimize(traj.bloch.back());
    }
}
BENCHMARK(BM_IntegrateClassical)->Arg(5)->Arg(20)->Arg(160);

static void BM_ClassicalKinematics(benchmark::State& state) {
    SimConfig cfg{5.0, 0.0, 0.0, M_PI, 256};
    const auto traj = integrate_classical(cfg);
    for (auto _ : state) {
        double acc = 0.0;
        for (std::size_t i = 0; i < traj.size(); ++i)
            acc += classical_kinematics(traj.bloch[i], traj.times[i], cfg.omega).s_dot;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ClassicalKinematics);

static void BM_SpectralDecomposition(benchmark::State& state) {
    QuantumConfig cfg;
    cfg.alpha = static_cast<double>(state.range(0));
    cfg.omega = 5.0;
    const auto H = build_hamiltonian(cfg, false);
    for (auto _ : state) {
        SpectralPropagator prop(H);
        benchmark::DoNotOptimize(prop.eigenvalues()[0]);
    }
}
BENCHMARK(BM_SpectralDecomposition)->Arg(1)->Arg(5);

static void BM_SpectralEvolve(benchmark::State& state) {
    QuantumConfig cfg;
    cfg.alpha = 5.0;
    cfg.omega = 5.0;
    const SpectralPropagator prop(build_hamiltonian(cfg, false));
    const auto psi0 = initial_joint_state(cfg);
    double t = 0.1;
    for (auto _ : state) {
        auto psi = prop.evolve(psi0, t);
        benchmark::DoNotOptimize(psi.amp[0]);
        t += 0.1;
    }
}
BENCHMARK(BM_SpectralEvolve);

static void BM_EhrenfestSample(benchmark::State& state) {
    QuantumConfig cfg;
    cfg.alpha = 5.0;
    cfg.omega = 5.0;
    const auto H = build_hamiltonian(cfg, false);
    const SpectralPropagator prop(H);
    const EhrenfestKinematics kin(H, cfg);
    const auto psi = prop.evolve(initial_joint_state(cfg), 0.4);
    for (auto _ : state) {
        auto sample = kin.sample(psi, 0.4);
        benchmark::DoNotOptimize(sample.kappa);
    }
}
BENCHMARK(BM_EhrenfestSample);

static void BM_DeltaClassical(benchmark::State& state) {
    DeltaScanSpec spec;
    spec.omegas = {20.0};
    for (auto _ : state) {
        auto res = delta_scan(spec);
        benchmark::DoNotOptimize(res.deltas[0]);
    }
}
BENCHMARK(BM_DeltaClassical);

BENCHMARK_MAIN();
