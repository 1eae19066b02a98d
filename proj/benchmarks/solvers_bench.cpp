// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include <benchmark/benchmark.h>

#include "irssec/bcd.hpp"
#include "irssec/beamforming.hpp"
#include "irssec/exhaustive.hpp"
#include "irssec/harness.hpp"
#include "irssec/sdr.hpp"

namespace {

irssec::CascadeVectors cascades_for(std::size_t elements)
{
    irssec::ExperimentConfig cfg;
    cfg.irs_elements = elements;
    const auto setup = irssec::prepare_trial(cfg, 0);
    return irssec::build_cascades(setup.channels, setup.beamformer, setup.noise);
}

void BM_BcdDiscrete(benchmark::State& state)
{
    const auto c = cascades_for(static_cast<std::size_t>(state.range(0)));
    const irssec::DiscretePhaseSet set(8);
    const auto init = irssec::bob_aligned_phases(c, set);
    for (auto _ : state)
        benchmark::DoNotOptimize(irssec::run_algorithm1(c, init).objective());
}
BENCHMARK(BM_BcdDiscrete)->Arg(4)->Arg(16)->Arg(64)->Arg(100);

void BM_BcdContinuous(benchmark::State& state)
{
    const auto c = cascades_for(static_cast<std::size_t>(state.range(0)));
    const auto init = irssec::PhaseVector::zeros(c.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(irssec::run_algorithm1(c, init).objective());
}
BENCHMARK(BM_BcdContinuous)->Arg(4)->Arg(16)->Arg(64);

void BM_SolveSdp(benchmark::State& state)
{
    const auto m = irssec::build_sdr_matrices(cascades_for(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(irssec::solve_sdp(m).objective);
}
BENCHMARK(BM_SolveSdp)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Exhaustive(benchmark::State& state)
{
    const auto c = cascades_for(4);
    const irssec::DiscretePhaseSet set(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(irssec::exhaustive_search(c, set).objective);
}
BENCHMARK(BM_Exhaustive)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_OmpHybrid(benchmark::State& state)
{
    const auto bs = irssec::ArrayGeometry::ula(16);
    const irssec::SteeringDictionary dict(bs);
    const irssec::CVec w = irssec::mrt_beamformer(irssec::steering_ula(bs, 0.4), 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(irssec::omp_hybrid_decompose(w, dict, 10, 0.3).baseband);
}
BENCHMARK(BM_OmpHybrid);

} // namespace

BENCHMARK_MAIN();
