// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/selfcheck.hpp"

#include <cmath>
#include <sstream>

#include "irssec/bcd.hpp"
#include "irssec/beamforming.hpp"
#include "irssec/csv.hpp"
#include "irssec/exhaustive.hpp"
#include "irssec/harness.hpp"
#include "irssec/sdr.hpp"

namespace irssec {

namespace {

std::string describe(double worst)
{
    std::ostringstream os;
    os << "worst=" << worst;
    return os.str();
}

CheckResult steering_norms(Rng& rng)
{
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const CVec u = steering_ula(ArrayGeometry::ula(16), ang(rng));
        const CVec r = steering_ura(ArrayGeometry::ura(4, 5), ang(rng), ang(rng));
        worst = std::max({worst, std::abs(u.norm() - 1.0), std::abs(r.norm() - 1.0),
                          (u.cwiseAbs().array() - 0.25).abs().maxCoeff(),
                          (r.cwiseAbs().array() - 1.0 / std::sqrt(20.0)).abs().maxCoeff()});
    }
    return {"steering vectors unit norm, constant modulus", worst <= 1e-12, describe(worst)};
}

CheckResult rank_one(Rng& rng)
{
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto ch = build_bs_irs_channel({}, ArrayGeometry::ula(16), ArrayGeometry::ura(2, 4), {}, rng);
        const Eigen::JacobiSVD<CMat> svd(ch.matrix());
        const RVec s = svd.singularValues();
        worst = std::max(worst, s(1) / s(0));
    }
    return {"BS-IRS channel rank one", worst < 1e-10, describe(worst)};
}

CheckResult bcd_grid(Rng& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        ElementCoefficients k;
        k.d_bob = 5.0 * u(rng);
        k.d_eve = 5.0 * u(rng);
        k.c_bob = 1.0 + k.d_bob + 3.0 * u(rng);
        k.c_eve = 1.0 + k.d_eve + 3.0 * u(rng);
        k.p_bob = kTwoPi * u(rng);
        k.p_eve = kTwoPi * u(rng);
        const auto best = bcd_phase_update(k);
        if (!best)
            continue;
        double grid = -1.0;
        for (int g = 0; g < 4000; ++g)
            grid = std::max(grid, k.evaluate(kTwoPi * g / 4000.0));
        worst = std::max(worst, grid - k.evaluate(*best));
    }
    return {"closed-form element update beats grid search", worst <= 1e-8, describe(worst)};
}

CheckResult trial_orderings()
{
    ExperimentConfig cfg;
    cfg.num_trials = 10;
    cfg.record_timing = false;
    cfg.solvers = {SolverKind::BcdDiscrete, SolverKind::BcdContinuous, SolverKind::Sdp, SolverKind::Exhaustive};
    std::size_t violations = 0;
    for (std::size_t t = 0; t < cfg.num_trials; ++t) {
        const auto setup = prepare_trial(cfg, t);
        const auto c = build_cascades(setup.channels, setup.beamformer, setup.noise);
        const DiscretePhaseSet set(cfg.phase_levels);
        const auto disc = run_algorithm1(c, bob_aligned_phases(c, set));
        for (std::size_t i = 1; i < disc.objective_history.size(); ++i)
            if (disc.objective_history[i] < disc.objective_history[i - 1] * (1.0 - 1e-12))
                ++violations;
        const auto cont = run_algorithm1(c, PhaseVector::continuous(disc.phase.thetas()));
        const auto exh = exhaustive_search(c, set);
        Rng rng = trial_rng(cfg.master_seed, t, 1);
        const auto sdp = sdp_pipeline(c, set, 50, rng);
        if (exh.objective < disc.objective() * (1.0 - 1e-12) || exh.objective < sdp.objective * (1.0 - 1e-12))
            ++violations;
        if (cont.objective() < disc.objective() || sdp.sdp.objective < cont.objective() * (1.0 - 1e-6))
            ++violations;
    }
    return {"monotone BCD, exhaustive dominance, relaxation ordering", violations == 0,
            "violations=" + std::to_string(violations)};
}

CheckResult mrt_optimality(Rng& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    CVec b(8);
    for (auto& x : b)
        x = Complex(n(rng), n(rng));
    const double power = 2.0;
    const CVec w = mrt_beamformer(b, power);
    const double best = std::norm(b.dot(w));
    std::size_t beaten = 0;
    for (int s = 0; s < 2000; ++s) {
        CVec v(8);
        for (auto& x : v)
            x = Complex(n(rng), n(rng));
        v *= std::sqrt(power) / v.norm();
        if (std::norm(b.dot(v)) > best * (1.0 + 1e-12))
            ++beaten;
    }
    return {"MRT beamformer optimal over random feasible w", beaten == 0, "beaten=" + std::to_string(beaten)};
}

CheckResult csv_determinism()
{
    ExperimentConfig cfg;
    cfg.num_trials = 4;
    cfg.record_timing = false;
    cfg.solvers = {SolverKind::BcdDiscrete, SolverKind::Exhaustive};
    cfg.sweep = {SweepParam::PhaseLevels, {2, 4}};
    const auto a = format_csv(run_sweep(cfg));
    cfg.threads = 3;
    const auto b = format_csv(run_sweep(cfg));
    return {"sweep CSV byte-identical across reruns and worker counts", a == b, ""};
}

} // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(steering_norms(rng));
    out.push_back(rank_one(rng));
    out.push_back(bcd_grid(rng));
    out.push_back(mrt_optimality(rng));
    out.push_back(trial_orderings());
    out.push_back(csv_determinism());
    return out;
}

} // namespace irssec
